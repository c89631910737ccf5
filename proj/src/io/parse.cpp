#include "io/parse.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "geom/plane.hpp"
#include "geom/ruled.hpp"

namespace pfol {

namespace {

struct Tok {
  enum Kind { Num, Ident, Op, End } kind;
  std::string text;
  uint64_t num = 0;
  int line = 1, col = 1;
};

struct Lexer {
  std::string src;
  size_t pos = 0;
  int line = 1, col = 1;

  [[noreturn]] void err(const std::string& what) const {
    std::ostringstream os;
    os << "syntax error at " << line << ":" << col << ": " << what;
    fail(Err::SyntaxError, os.str());
  }

  void bump(char c) {
    ++pos;
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }

  Tok next() {
    while (pos < src.size() && std::isspace((unsigned char)src[pos])) bump(src[pos]);
    Tok t;
    t.line = line;
    t.col = col;
    if (pos >= src.size()) {
      t.kind = Tok::End;
      return t;
    }
    char c = src[pos];
    if (std::isdigit((unsigned char)c)) {
      t.kind = Tok::Num;
      uint64_t v = 0;
      while (pos < src.size() && std::isdigit((unsigned char)src[pos])) {
        v = v * 10 + (uint64_t)(src[pos] - '0');
        if (v > (1ULL << 62)) err("integer literal too large");
        t.text += src[pos];
        bump(src[pos]);
      }
      t.num = v;
      return t;
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      t.kind = Tok::Ident;
      while (pos < src.size() && (std::isalnum((unsigned char)src[pos]) || src[pos] == '_')) {
        t.text += src[pos];
        bump(src[pos]);
      }
      return t;
    }
    if (std::string("+-*^()/,=:").find(c) != std::string::npos) {
      t.kind = Tok::Op;
      t.text = std::string(1, c);
      bump(c);
      return t;
    }
    err(std::string("unexpected character '") + c + "'");
  }
};

struct TokStream {
  std::vector<Tok> toks;
  size_t i = 0;
  const Tok& peek(size_t ahead = 0) const {
    size_t j = i + ahead;
    return j < toks.size() ? toks[j] : toks.back();
  }
  Tok take() { return toks[std::min(i++, toks.size() - 1)]; }
  bool at_op(const char* s) const { return peek().kind == Tok::Op && peek().text == s; }
  [[noreturn]] void err(const std::string& what) const {
    std::ostringstream os;
    os << "syntax error at " << peek().line << ":" << peek().col << ": " << what;
    fail(Err::SyntaxError, os.str());
  }
};

TokStream lex(const std::string& s) {
  Lexer lx{s};
  TokStream ts;
  for (;;) {
    Tok t = lx.next();
    ts.toks.push_back(t);
    if (t.kind == Tok::End) break;
  }
  return ts;
}

// generic evaluation target so the same grammar serves field and integer
// coefficients
struct PolyEval {
  FieldPtr F;
  VarsPtr V;
  std::string gen;  // extension generator, usable as a scalar

  MPoly number(uint64_t n) const { return MPoly::constant(F, V, (int64_t)n); }
  MPoly ident(const TokStream& ts, const std::string& name) const {
    int idx = V->index(name);
    if (idx >= 0) return MPoly::variable(F, V, (unsigned)idx);
    if (!gen.empty() && name == gen) return MPoly::constant(F, V, Fq::gen(F));
    ts.err("unknown variable '" + name + "'");
  }
};

struct ZEval {
  VarsPtr V;
  using P = std::map<Mono, long long>;
};

MPoly parse_expr(TokStream& ts, const PolyEval& ev);

MPoly parse_base(TokStream& ts, const PolyEval& ev) {
  if (ts.at_op("(")) {
    ts.take();
    MPoly e = parse_expr(ts, ev);
    if (!ts.at_op(")")) ts.err("expected ')'");
    ts.take();
    return e;
  }
  if (ts.at_op("-")) {
    ts.take();
    return -parse_base(ts, ev);
  }
  Tok t = ts.take();
  if (t.kind == Tok::Num) return ev.number(t.num);
  if (t.kind == Tok::Ident) return ev.ident(ts, t.text);
  ts.err("expected a number, variable or '('");
}

MPoly parse_factor(TokStream& ts, const PolyEval& ev) {
  MPoly b = parse_base(ts, ev);
  if (ts.at_op("^")) {
    ts.take();
    Tok e = ts.take();
    if (e.kind != Tok::Num) ts.err("exponent must be a nonnegative integer");
    return b.pow(e.num);
  }
  return b;
}

MPoly parse_term(TokStream& ts, const PolyEval& ev) {
  MPoly acc = parse_factor(ts, ev);
  while (ts.at_op("*")) {
    ts.take();
    acc *= parse_factor(ts, ev);
  }
  return acc;
}

MPoly parse_expr(TokStream& ts, const PolyEval& ev) {
  bool neg = false;
  if (ts.at_op("-")) {
    ts.take();
    neg = true;
  } else if (ts.at_op("+")) {
    ts.take();
  }
  MPoly acc = parse_term(ts, ev);
  if (neg) acc = -acc;
  while (ts.at_op("+") || ts.at_op("-")) {
    bool minus = ts.take().text == "-";
    MPoly t = parse_term(ts, ev);
    acc = minus ? acc - t : acc + t;
  }
  return acc;
}

// ---- differential payloads --------------------------------------------------

// is the token stream sitting on a differential marker? "dx" style or "d/dx"
int diff_index(const TokStream& ts, const std::vector<std::string>& diffs, bool deriv_style,
               size_t* consumed) {
  const Tok& t = ts.peek();
  if (t.kind != Tok::Ident) return -1;
  if (deriv_style) {
    if (t.text != "d" || !(ts.peek(1).kind == Tok::Op && ts.peek(1).text == "/")) return -1;
    const Tok& v = ts.peek(2);
    if (v.kind != Tok::Ident) return -1;
    for (size_t i = 0; i < diffs.size(); ++i)
      if (v.text == "d" + diffs[i]) {
        *consumed = 3;
        return (int)i;
      }
    return -1;
  }
  for (size_t i = 0; i < diffs.size(); ++i)
    if (t.text == "d" + diffs[i]) {
      *consumed = 1;
      return (int)i;
    }
  return -1;
}

// payload := [sign] expr diff ([+-] expr diff)* ; expressions may not span a
// differential marker, so parsing stops there
std::vector<MPoly> parse_diff_payload(TokStream& ts, const PolyEval& ev,
                                      const std::vector<std::string>& diffs, bool deriv_style) {
  std::vector<MPoly> out(diffs.size(), MPoly::constant(ev.F, ev.V, 0));
  bool first = true;
  while (ts.peek().kind != Tok::End) {
    bool neg = false;
    if (ts.at_op("-")) {
      ts.take();
      neg = true;
    } else if (ts.at_op("+")) {
      ts.take();
    } else if (!first) {
      ts.err("expected '+' or '-' between form terms");
    }
    first = false;
    // coefficient: product of factors until a differential marker
    size_t consumed = 0;
    MPoly coeff = MPoly::constant(ev.F, ev.V, 1);
    bool have = false;
    while (diff_index(ts, diffs, deriv_style, &consumed) < 0) {
      if (ts.peek().kind == Tok::End) ts.err("missing differential at end of term");
      if (have) {
        if (!ts.at_op("*")) ts.err("expected '*' or a differential");
        ts.take();
      }
      coeff *= parse_factor(ts, ev);
      have = true;
    }
    int di = diff_index(ts, diffs, deriv_style, &consumed);
    for (size_t k = 0; k < consumed; ++k) ts.take();
    if (neg) coeff = -coeff;
    out[(size_t)di] += coeff;
  }
  return out;
}

// ---- header -----------------------------------------------------------------

struct Header {
  std::string kind;     // poly | field | form
  std::string surface;  // A2 | P2 | P1xP1 | Sigma | ""
  std::map<std::string, std::string> params;
};

Header split_header(const std::string& text, size_t colon) {
  Header h;
  std::istringstream is(text.substr(0, colon));
  std::string w;
  bool first = true;
  while (is >> w) {
    auto eq = w.find('=');
    if (eq != std::string::npos) {
      h.params[w.substr(0, eq)] = w.substr(eq + 1);
      continue;
    }
    if (first) {
      h.kind = w;
      first = false;
    } else if (h.surface.empty()) {
      h.surface = w;
    } else {
      fail(Err::SyntaxError, "unexpected header word '" + w + "'");
    }
  }
  if (h.kind.empty()) fail(Err::SyntaxError, "empty input header");
  return h;
}

uint64_t param_int(const Header& h, const std::string& key) {
  auto it = h.params.find(key);
  if (it == h.params.end()) fail(Err::SyntaxError, "missing required parameter " + key + "=");
  try {
    return std::stoull(it->second);
  } catch (...) {
    fail(Err::SyntaxError, "parameter " + key + "= must be an integer");
  }
}

FieldPtr field_from_header(const Header& h, std::string* gen_out) {
  uint64_t p = param_int(h, "p");
  unsigned ext = h.params.count("ext") ? (unsigned)param_int(h, "ext") : 1;
  if (ext == 1) {
    gen_out->clear();
    return Field::prime(p);
  }
  auto mit = h.params.find("mod");
  if (mit == h.params.end()) {
    *gen_out = "t";
    return Field::extension_auto(p, ext, 1);
  }
  // the modulus names its own generator variable
  TokStream ts = lex(mit->second);
  std::string gen;
  for (auto& t : ts.toks)
    if (t.kind == Tok::Ident) {
      if (!gen.empty() && gen != t.text)
        fail(Err::SyntaxError, "modulus must use a single generator variable");
      gen = t.text;
    }
  if (gen.empty()) fail(Err::SyntaxError, "modulus has no generator variable");
  FieldPtr Fp = Field::prime(p);
  VarsPtr gv = Vars::make({gen});
  PolyEval ev{Fp, gv, ""};
  MPoly m = parse_expr(ts, ev);
  if (ts.peek().kind != Tok::End) ts.err("trailing input after modulus");
  std::vector<uint64_t> coeffs((size_t)m.degree() + 1, 0);
  for (auto& t : m.terms()) coeffs[mono_get(t.m, 0)] = t.c.residue();
  *gen_out = gen;
  return Field::extension(p, std::move(coeffs), gen);
}

}  // namespace

MPoly parse_poly(const std::string& text, FieldPtr f, VarsPtr v) {
  TokStream ts = lex(text);
  std::string gen = f->k() > 1 ? f->gen_name() : "";
  PolyEval ev{std::move(f), std::move(v), gen};
  MPoly r = parse_expr(ts, ev);
  if (ts.peek().kind != Tok::End) ts.err("trailing input after expression");
  return r;
}

// ---- integer-coefficient expressions ----------------------------------------

namespace {

using ZP = std::map<Mono, long long>;

ZP z_num(long long n) {
  ZP r;
  if (n) r[0] = n;
  return r;
}

ZP z_add(const ZP& a, const ZP& b) {
  ZP r = a;
  for (auto& [m, c] : b) {
    r[m] += c;
    if (r[m] == 0) r.erase(m);
  }
  return r;
}

ZP z_neg(const ZP& a) {
  ZP r;
  for (auto& [m, c] : a) r[m] = -c;
  return r;
}

ZP z_mul(const ZP& a, const ZP& b) {
  ZP r;
  for (auto& [m1, c1] : a)
    for (auto& [m2, c2] : b) {
      Mono m = mono_mul(m1, m2);
      r[m] += c1 * c2;
      if (r[m] == 0) r.erase(m);
    }
  return r;
}

ZP parse_zexpr(TokStream& ts, VarsPtr v);

ZP parse_zbase(TokStream& ts, VarsPtr v) {
  if (ts.at_op("(")) {
    ts.take();
    ZP e = parse_zexpr(ts, v);
    if (!ts.at_op(")")) ts.err("expected ')'");
    ts.take();
    return e;
  }
  if (ts.at_op("-")) {
    ts.take();
    return z_neg(parse_zbase(ts, v));
  }
  Tok t = ts.take();
  if (t.kind == Tok::Num) return z_num((long long)t.num);
  if (t.kind == Tok::Ident) {
    int idx = v->index(t.text);
    if (idx < 0) ts.err("unknown variable '" + t.text + "'");
    ZP r;
    r[mono_set(0, (unsigned)idx, 1)] = 1;
    return r;
  }
  ts.err("expected a number, variable or '('");
}

ZP parse_zfactor(TokStream& ts, VarsPtr v) {
  ZP b = parse_zbase(ts, v);
  if (ts.at_op("^")) {
    ts.take();
    Tok e = ts.take();
    if (e.kind != Tok::Num) ts.err("exponent must be a nonnegative integer");
    ZP r = z_num(1);
    for (uint64_t i = 0; i < e.num; ++i) r = z_mul(r, b);
    return r;
  }
  return b;
}

ZP parse_zterm(TokStream& ts, VarsPtr v) {
  ZP acc = parse_zfactor(ts, v);
  while (ts.at_op("*")) {
    ts.take();
    acc = z_mul(acc, parse_zfactor(ts, v));
  }
  return acc;
}

ZP parse_zexpr(TokStream& ts, VarsPtr v) {
  bool neg = false;
  if (ts.at_op("-")) {
    ts.take();
    neg = true;
  } else if (ts.at_op("+")) {
    ts.take();
  }
  ZP acc = parse_zterm(ts, v);
  if (neg) acc = z_neg(acc);
  while (ts.at_op("+") || ts.at_op("-")) {
    bool minus = ts.take().text == "-";
    ZP t = parse_zterm(ts, v);
    acc = z_add(acc, minus ? z_neg(t) : t);
  }
  return acc;
}

std::vector<ZTerm> zp_to_terms(const ZP& p) {
  std::vector<ZTerm> out;
  for (auto& [m, c] : p) out.push_back({m, c});
  return out;
}

}  // namespace

std::vector<ZTerm> parse_zpoly(const std::string& text, VarsPtr v) {
  TokStream ts = lex(text);
  ZP p = parse_zexpr(ts, v);
  if (ts.peek().kind != Tok::End) ts.err("trailing input after expression");
  return zp_to_terms(p);
}

std::array<std::vector<ZTerm>, 3> parse_zform_payload(const std::string& text, VarsPtr v) {
  TokStream ts = lex(text);
  std::array<ZP, 3> out;
  std::vector<std::string> diffs{"x", "y", "z"};
  bool first = true;
  while (ts.peek().kind != Tok::End) {
    bool neg = false;
    if (ts.at_op("-")) {
      ts.take();
      neg = true;
    } else if (ts.at_op("+")) {
      ts.take();
    } else if (!first) {
      ts.err("expected '+' or '-' between form terms");
    }
    first = false;
    size_t consumed = 0;
    ZP coeff = z_num(1);
    bool have = false;
    while (diff_index(ts, diffs, false, &consumed) < 0) {
      if (ts.peek().kind == Tok::End) ts.err("missing differential at end of term");
      if (have) {
        if (!ts.at_op("*")) ts.err("expected '*' or a differential");
        ts.take();
      }
      coeff = z_mul(coeff, parse_zfactor(ts, v));
      have = true;
    }
    int di = diff_index(ts, diffs, false, &consumed);
    for (size_t k = 0; k < consumed; ++k) ts.take();
    if (neg) coeff = z_neg(coeff);
    out[(size_t)di] = z_add(out[(size_t)di], coeff);
  }
  return {zp_to_terms(out[0]), zp_to_terms(out[1]), zp_to_terms(out[2])};
}

Input parse_input(const std::string& text) {
  size_t colon = text.find(':');
  if (colon == std::string::npos) fail(Err::SyntaxError, "missing ':' after the input header");
  Header h = split_header(text, colon);
  std::string payload = text.substr(colon + 1);
  Input in;

  std::string gen;
  in.field = field_from_header(h, &gen);

  if (h.kind == "poly") {
    auto vit = h.params.find("vars");
    if (vit == h.params.end()) fail(Err::SyntaxError, "poly input needs vars=");
    std::vector<std::string> names;
    std::string cur;
    for (char c : vit->second) {
      if (c == ',') {
        names.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) names.push_back(cur);
    VarsPtr V = Vars::make(names);
    in.kind = Input::Poly;
    in.poly = std::make_shared<MPoly>(parse_poly(payload, in.field, V));
    return in;
  }

  if (h.kind != "field" && h.kind != "form")
    fail(Err::SyntaxError, "input kind must be poly, field or form");
  if (h.surface.empty()) fail(Err::SyntaxError, "field/form input needs a surface");

  if (h.surface == "A2") {
    VarsPtr V = Vars::make({"x", "y"});
    PolyEval ev{in.field, V, gen};
    TokStream ts = lex(payload);
    auto cs = parse_diff_payload(ts, ev, {"x", "y"}, h.kind == "field");
    if (h.kind == "field") {
      in.kind = Input::Field2;
      in.vfield = std::make_shared<VectorField>(VectorField::make(cs[0], cs[1]));
    } else {
      in.kind = Input::Form2;
      in.aform = std::make_shared<AffineForm>(AffineForm::make(cs[0], cs[1]));
    }
    return in;
  }
  if (h.kind == "field") fail(Err::SyntaxError, "vector-field input is supported on A2 only");

  if (h.surface == "P2") {
    VarsPtr V = Vars::make({"x", "y", "z"});
    PolyEval ev{in.field, V, gen};
    TokStream ts = lex(payload);
    auto cs = parse_diff_payload(ts, ev, {"x", "y", "z"}, false);
    in.kind = Input::FormP2;
    in.pform = std::make_shared<PlaneForm>(PlaneForm::make(cs[0], cs[1], cs[2]));
    return in;
  }
  if (h.surface == "P1xP1" || h.surface == "Sigma") {
    int d = h.surface == "Sigma" ? (int)param_int(h, "d") : 0;
    VarsPtr V = Vars::make({"x0", "x1", "y0", "y1"});
    PolyEval ev{in.field, V, gen};
    TokStream ts = lex(payload);
    auto cs = parse_diff_payload(ts, ev, {"x0", "x1", "y0", "y1"}, false);
    in.kind = Input::FormSigma;
    in.sigma_d = d;
    in.sform = std::make_shared<SigmaForm>(SigmaForm::make(d, cs[0], cs[1], cs[2], cs[3]));
    return in;
  }
  fail(Err::SyntaxError, "unknown surface '" + h.surface + "'");
}

}  // namespace pfol

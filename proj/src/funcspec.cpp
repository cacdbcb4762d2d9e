#include "multlab/funcspec.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <vector>

namespace multlab::funcspec {

using gallery::GalleryEntry;

namespace {

struct KV {
  std::string key;
  double value;
  std::size_t pos;
};

struct Arg {
  bool is_kv = false;
  KV kv;
  GalleryEntry entry;
  std::string entry_name;  // head identifier of a spec argument
  std::size_t pos = 0;
};

struct Parser {
  const std::string& src;
  std::size_t pos = 0;

  explicit Parser(const std::string& s) : src(s) {}

  void skip_ws() {
    while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t')) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
      ++pos;
    if (pos == start) throw ParseError("expected a name", pos);
    return src.substr(start, pos - start);
  }
  double number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() && (std::isdigit(static_cast<unsigned char>(src[pos])) ||
                                src[pos] == '.' || src[pos] == '-' || src[pos] == '+' ||
                                src[pos] == 'e' || src[pos] == 'E'))
      ++pos;
    double out = 0;
    auto [p, ec] = std::from_chars(src.data() + start, src.data() + pos, out);
    if (ec != std::errc() || p != src.data() + pos || pos == start)
      throw ParseError("expected a number", start);
    return out;
  }

  KV parse_kv() {
    KV kv;
    kv.pos = pos;
    kv.key = ident();
    expect('=');
    kv.value = number();
    return kv;
  }

  // lookahead: does an identifier followed by '=' start here?
  bool kv_ahead() {
    std::size_t save = pos;
    skip_ws();
    std::size_t p = pos;
    while (p < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[p])) || src[p] == '_'))
      ++p;
    bool yes = p > pos && p < src.size() && src[p] == '=';
    pos = save;
    return yes;
  }

  GalleryEntry parse_spec();
};

double require_kv(const std::vector<KV>& kvs, const std::string& key, std::size_t at) {
  for (const auto& kv : kvs)
    if (kv.key == key) return kv.value;
  throw ParseError("missing parameter '" + key + "'", at);
}

void reject_extra(const std::vector<KV>& kvs, std::initializer_list<const char*> allowed) {
  for (const auto& kv : kvs) {
    bool ok = false;
    for (const char* a : allowed)
      if (kv.key == a) ok = true;
    if (!ok) throw ParseError("unknown parameter '" + kv.key + "'", kv.pos);
  }
}

GalleryEntry Parser::parse_spec() {
  skip_ws();
  const std::size_t name_pos = pos;
  std::string name = ident();

  std::vector<Arg> args;
  std::vector<KV> kvs;
  if (peek() == '(') {
    ++pos;
    for (;;) {
      Arg a;
      a.pos = pos;
      if (kv_ahead()) {
        a.is_kv = true;
        a.kv = parse_kv();
      } else {
        std::size_t head = pos;
        skip_ws();
        std::size_t p = head = pos;
        while (p < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[p])) || src[p] == '_'))
          ++p;
        a.entry_name = src.substr(head, p - head);
        a.entry = parse_spec();
      }
      args.push_back(std::move(a));
      if (peek() == ',') {
        ++pos;
        continue;
      }
      expect(')');
      break;
    }
  } else {
    while (peek() == ':') {
      ++pos;
      kvs.push_back(parse_kv());
    }
  }

  auto no_args = [&] {
    if (!args.empty()) throw ParseError("'" + name + "' takes no arguments", name_pos);
  };

  if (name == "one") {
    no_args();
    reject_extra(kvs, {});
    return gallery::make_basic(gallery::Basic::one);
  }
  if (name == "moebius") {
    no_args();
    reject_extra(kvs, {});
    return gallery::make_basic(gallery::Basic::moebius);
  }
  if (name == "moebius_twist") {
    no_args();
    reject_extra(kvs, {"gamma"});
    return gallery::make_moebius_twist(require_kv(kvs, "gamma", name_pos));
  }
  if (name == "tau") {
    no_args();
    reject_extra(kvs, {"k"});
    return gallery::make_tau(static_cast<int>(require_kv(kvs, "k", name_pos)));
  }
  if (name == "remark") {
    no_args();
    reject_extra(kvs, {"D"});
    return gallery::make_remark(static_cast<int>(require_kv(kvs, "D", name_pos)));
  }
  if (name == "char") {
    no_args();
    reject_extra(kvs, {"q"});
    return gallery::make_quadratic_char(
        static_cast<long long>(require_kv(kvs, "q", name_pos)));
  }
  if (name == "conv") {
    if (!kvs.empty()) throw ParseError("conv takes parenthesized arguments", name_pos);
    std::vector<GalleryEntry> parts;
    std::vector<std::string> heads;
    std::vector<double> twist_gammas;
    bool all_twists = true;
    for (const auto& a : args) {
      if (a.is_kv) throw ParseError("conv arguments must be function specs", a.pos);
      parts.push_back(a.entry);
      heads.push_back(a.entry_name);
      if (a.entry_name == "moebius_twist") {
        // recover gamma from the parsed entry's zero
        twist_gammas.push_back(a.entry.known_zeros.at(0).imag());
      } else {
        all_twists = false;
      }
    }
    if (parts.size() < 2) throw ParseError("conv needs at least two arguments", name_pos);
    if (all_twists && parts.size() <= 3) return gallery::make_twist_product(twist_gammas);
    if (parts.size() == 2 && heads[0] == "moebius" && heads[1] == "moebius")
      return gallery::make_basic(gallery::Basic::moebius_conv_moebius);
    if (parts.size() == 2 && heads[0] == "one" && heads[1] == "char") {
      std::string lbl = parts[1].f.label();  // char:q=N
      long long q = std::strtoll(lbl.c_str() + lbl.find('=') + 1, nullptr, 10);
      return gallery::make_one_conv_char(q);
    }
    // generic convolution: carries summed D, drops ground-truth metadata
    GalleryEntry e = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) e.f = multfun::convolve(e.f, parts[i].f);
    int D = 0;
    for (const auto& p : parts) D += p.params.D;
    double Q = 3;
    for (const auto& p : parts) Q = std::max(Q, p.params.Q);
    e.params = multfun::ClassParams(D, D + 1.5, Q, 0.0);
    e.known_m.reset();
    e.zeros_known = false;
    e.known_zeros.clear();
    e.notes = "generic convolution; no analytic metadata";
    e.f.set_params(e.params);
    return e;
  }
  if (name == "twist") {
    if (args.size() != 2 || args[0].is_kv || !args[1].is_kv || args[1].kv.key != "gamma")
      throw ParseError("twist needs (spec, gamma=...)", name_pos);
    return gallery::twist_entry(args[0].entry, args[1].kv.value);
  }
  throw ParseError("unknown function name '" + name + "'", name_pos);
}

}  // namespace

GalleryEntry parse(const std::string& text) {
  Parser p(text);
  GalleryEntry e = p.parse_spec();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
  return e;
}

std::string print(const gallery::GalleryEntry& entry) { return entry.f.label(); }

std::string annotate_error(const std::string& text, const ParseError& err) {
  std::string out = "parse error: ";
  out += err.what();
  out += "\n  ";
  out += text;
  out += "\n  ";
  out += std::string(std::min(err.position, text.size()), ' ');
  out += "^";
  return out;
}

}  // namespace multlab::funcspec

#include "prefixgroup/certificate.hpp"

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif

#include "prefixgroup/error.hpp"
#include "prefixgroup/literal.hpp"

namespace prefixgroup {

using nlohmann::json;

namespace {

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

PrefixMap eval_factorization(const Factorization &f) {
  PrefixMap acc(f.arity);
  for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) {
    acc = compose(it->element, acc);
  }
  return acc;
}

json body_json(const Certificate &cert) {
  json j;
  j["kind"] = cert.kind();
  j["arity"] = cert.arity();
  std::visit(Overloaded{
                 [&](const NormalWord &w) {
                   j["base"] = w.base().str();
                   j["letters"] = json::array();
                   for (const auto &l : w.letters()) {
                     j["letters"].push_back({{"conj", l.conjugator.str()}, {"exp", l.exponent}});
                   }
                 },
                 [&](const CommutatorWord &w) {
                   j["factors"] = json::array();
                   for (const auto &f : w.factors) {
                     j["factors"].push_back({{"x", f.x.str()}, {"y", f.y.str()}});
                   }
                 },
                 [&](const Factorization &w) {
                   j["factors"] = json::array();
                   for (const auto &f : w.factors) {
                     j["factors"].push_back(
                         {{"element", f.element.str()}, {"fixes", f.fixes.str()}});
                   }
                 }},
             cert.body);
  j["target"] = cert.target.str();
  return j;
}

const json &field(const json &j, const char *key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(0, std::string("certificate is missing \"") + key + "\"");
  }
  return j.at(key);
}

std::string text_field(const json &j, const char *key) {
  const json &v = field(j, key);
  if (!v.is_string()) throw ParseError(0, std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

const json &array_field(const json &j, const char *key) {
  const json &v = field(j, key);
  if (!v.is_array()) throw ParseError(0, std::string("\"") + key + "\" must be an array");
  return v;
}

Certificate certificate_from_json(const json &j) {
  const std::string kind = text_field(j, "kind");
  int arity = 2;
  if (j.contains("arity")) {
    if (!j["arity"].is_number_integer()) throw ParseError(0, "\"arity\" must be an integer");
    arity = j["arity"].get<int>();
    if (arity < kMinArity || arity > kMaxArity) throw ParseError(0, "arity out of range");
  }
  auto element = [arity](const json &o, const char *key) {
    return parse_element(text_field(o, key), arity);
  };
  PrefixMap target = element(j, "target");

  if (kind == "normal_word") {
    PrefixMap base = element(j, "base");
    if (base.is_identity()) throw ParseError(0, "normal word base must be non-trivial");
    std::vector<NormalLetter> letters;
    for (const auto &l : array_field(j, "letters")) {
      const json &e = field(l, "exp");
      if (!e.is_number_integer() || (e.get<int>() != 1 && e.get<int>() != -1)) {
        throw ParseError(0, "\"exp\" must be 1 or -1");
      }
      letters.push_back({element(l, "conj"), e.get<int>()});
    }
    return {NormalWord(std::move(base), std::move(letters)), std::move(target)};
  }
  if (kind == "commutator_word") {
    CommutatorWord w{arity, {}};
    for (const auto &f : array_field(j, "factors")) {
      w.factors.push_back({element(f, "x"), element(f, "y")});
    }
    return {std::move(w), std::move(target)};
  }
  if (kind == "factorization") {
    Factorization w{arity, {}};
    for (const auto &f : array_field(j, "factors")) {
      w.factors.push_back({element(f, "element"), parse_clopen(text_field(f, "fixes"), arity)});
    }
    return {std::move(w), std::move(target)};
  }
  throw ParseError(0, "unknown certificate kind \"" + kind + "\"");
}

}  // namespace

std::string Certificate::kind() const {
  return std::visit(Overloaded{[](const NormalWord &) { return "normal_word"; },
                               [](const CommutatorWord &) { return "commutator_word"; },
                               [](const Factorization &) { return "factorization"; }},
                    body);
}

Verdict verify(const Certificate &cert) {
  try {
    return std::visit(
        Overloaded{
            [&](const NormalWord &w) -> Verdict {
              const PrefixMap value = eval_normal_word(w);
              if (value != cert.target) {
                return {false, "normal word evaluates to " + value.str()};
              }
              return {true, {}};
            },
            [&](const CommutatorWord &w) -> Verdict {
              const PrefixMap value = eval_commutator_word(w);
              if (value != cert.target) {
                return {false, "commutator word evaluates to " + value.str()};
              }
              return {true, {}};
            },
            [&](const Factorization &w) -> Verdict {
              for (std::size_t i = 0; i < w.factors.size(); ++i) {
                if (!fixes_pointwise(w.factors[i].element, w.factors[i].fixes)) {
                  return {false, "factor " + std::to_string(i) + " does not fix " +
                                     w.factors[i].fixes.str()};
                }
              }
              const PrefixMap value = eval_factorization(w);
              if (value != cert.target) {
                return {false, "factorization evaluates to " + value.str()};
              }
              return {true, {}};
            }},
        cert.body);
  } catch (const Error &e) {
    return {false, e.what()};
  }
}

std::string to_json(const Certificate &cert, int indent) {
  return body_json(cert).dump(indent);
}

std::string to_json(const std::vector<Certificate> &bundle, int indent) {
  json j;
  j["certificates"] = json::array();
  for (const auto &c : bundle) j["certificates"].push_back(body_json(c));
  return j.dump(indent);
}

std::vector<Certificate> parse_certificates(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw ParseError(e.byte, "malformed JSON");
  }
  std::vector<Certificate> out;
  try {
    if (j.is_object() && j.contains("certificates")) {
      for (const auto &c : array_field(j, "certificates")) out.push_back(certificate_from_json(c));
    } else {
      out.push_back(certificate_from_json(j));
    }
  } catch (const json::exception &e) {
    throw ParseError(0, std::string("bad certificate: ") + e.what());
  }
  return out;
}

}  // namespace prefixgroup

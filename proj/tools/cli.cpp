#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "prefixgroup/certificate.hpp"
#include "prefixgroup/compression.hpp"
#include "prefixgroup/corpus.hpp"
#include "prefixgroup/error.hpp"
#include "prefixgroup/literal.hpp"
#include "prefixgroup/witnesses.hpp"

namespace pgw {

namespace pg = prefixgroup;

namespace {

struct Options {
  int arity = 2;
  std::uint64_t seed = 42;
  std::size_t depth = 5;
  int orbit_window = 8;
  bool json = false;
};

struct Context {
  const Options &opt;
  std::istream &in;
  std::ostream &out;
  std::ostream &err;

  pg::PrefixMap element(const std::string &s) const { return pg::parse_element(s, opt.arity); }
  pg::ClopenSet clopen(const std::string &s) const { return pg::parse_clopen(s, opt.arity); }

  int emit(const std::vector<pg::Certificate> &certs) const {
    if (certs.size() == 1) {
      out << pg::to_json(certs.front(), 2) << '\n';
    } else {
      out << pg::to_json(certs, 2) << '\n';
    }
    return kOk;
  }
};

std::string commutator_text(const pg::CommutatorWord &w) {
  if (w.empty()) return "(empty)";
  std::string s;
  for (const auto &f : w.factors) s += "[" + f.x.str() + ", " + f.y.str() + "]";
  return s;
}

void print_normal_word(std::ostream &out, const pg::NormalWord &w) {
  out << "base " << w.base().str() << '\n';
  out << "letters " << w.size() << '\n';
  for (const auto &l : w.letters()) {
    out << "  " << (l.exponent > 0 ? "+1 " : "-1 ") << l.conjugator.str() << '\n';
  }
}

pg::Certificate factorization_cert(int arity, std::vector<pg::FixingFactor> factors,
                                   pg::PrefixMap target) {
  return {pg::Factorization{arity, std::move(factors)}, std::move(target)};
}

const char *member_name(int i) {
  static const char *names[] = {"J1", "J2", "J3", "U1", "U2", "U3"};
  return names[i];
}

int cmd_reduce(const Context &c, const std::string &g) {
  c.out << c.element(g).str() << '\n';
  return kOk;
}

int cmd_compose(const Context &c, const std::vector<std::string> &factors) {
  std::vector<pg::PrefixMap> gs;
  for (const auto &f : factors) gs.push_back(c.element(f));
  c.out << pg::product(gs, c.opt.arity).str() << '\n';
  return kOk;
}

int cmd_sigma(const Context &c, const std::string &g, const std::string &y) {
  c.out << pg::sigma_swap(c.element(g), c.clopen(y)).str() << '\n';
  return kOk;
}

int cmd_decompose2(const Context &c, const std::string &gs) {
  const auto g = c.element(gs);
  const auto d = pg::decompose2(g);
  if (c.opt.json) {
    return c.emit({factorization_cert(
        c.opt.arity, {{d.s1, pg::complement(d.w1)}, {d.s2, pg::complement(d.w2)}}, g)});
  }
  c.out << "s1 " << d.s1.str() << '\n'
        << "W1 " << d.w1.str() << '\n'
        << "s2 " << d.s2.str() << '\n'
        << "W2 " << d.w2.str() << '\n';
  return kOk;
}

int cmd_transporter(const Context &c, const std::string &y, const std::string &o) {
  c.out << pg::transporter(c.clopen(y), c.clopen(o)).str() << '\n';
  return kOk;
}

int cmd_wandering(const Context &c, const std::string &ys) {
  const auto y = c.clopen(ys);
  const auto w = pg::wandering_witness(y);
  const bool disjoint = pg::orbit_pairwise_disjoint(w.g, y, c.opt.orbit_window);
  c.out << "g " << w.g.str() << '\n'
        << "Z " << w.z.str() << '\n'
        << "f " << w.f.str() << '\n'
        << "orbit-disjoint |n|<=" << c.opt.orbit_window << ' ' << (disjoint ? "yes" : "no")
        << '\n';
  return disjoint ? kOk : kVerificationFailure;
}

int cmd_join(const Context &c, const std::string &y, const std::string &z) {
  c.out << pg::join_compression(c.clopen(y), c.clopen(z)).str() << '\n';
  return kOk;
}

int cmd_cover3(const Context &c) {
  const auto m = pg::min_cover_3(c.opt.arity).members();
  for (int i = 0; i < 6; ++i) c.out << member_name(i) << ' ' << m[i].str() << '\n';
  return kOk;
}

int cmd_derived(const Context &c, const std::string &gs, const std::string &ws) {
  const auto dc = pg::derived_conjugator(c.element(gs), c.clopen(ws));
  if (c.opt.json) return c.emit({{dc.cert, dc.d}});
  c.out << "d " << dc.d.str() << '\n' << "cert " << commutator_text(dc.cert) << '\n';
  return kOk;
}

int cmd_monolith(const Context &c, const std::vector<std::string> &a) {
  const auto ea = c.element(a[0]), eb = c.element(a[2]);
  const auto w = pg::monolith_witness(ea, c.clopen(a[1]), eb, c.clopen(a[3]), c.element(a[4]));
  if (c.opt.json) {
    if (w.size() == 0) {
      c.out << "{\"certificates\": []}\n";
      return kOk;
    }
    return c.emit({{w, pg::commutator(ea, eb)}});
  }
  print_normal_word(c.out, w);
  return kOk;
}

int cmd_simple(const Context &c, const std::vector<std::string> &a) {
  const auto ea = c.element(a[0]), eb = c.element(a[2]);
  const auto x = c.element(a[4]), y = c.element(a[5]);
  const pg::CommutatorWord n_cert{c.opt.arity, {{x, y}}};
  const auto n = pg::eval_commutator_word(n_cert);
  if (n.is_identity()) {
    throw pg::Error(pg::ErrorKind::Precondition, "n = [X,Y] is the identity");
  }
  const auto sw = pg::simple_witness(ea, c.clopen(a[1]), eb, c.clopen(a[3]), n, n_cert);
  if (c.opt.json) {
    std::vector<pg::Certificate> certs;
    certs.push_back({n_cert, n});
    if (sw.word.size() > 0) certs.push_back({sw.word, pg::commutator(ea, eb)});
    for (std::size_t i = 0; i < sw.conj_certs.size(); ++i) {
      certs.push_back({sw.conj_certs[i], sw.word.letters()[i].conjugator});
    }
    c.out << pg::to_json(certs, 2) << '\n';
    return kOk;
  }
  print_normal_word(c.out, sw.word);
  for (std::size_t i = 0; i < sw.conj_certs.size(); ++i) {
    c.out << "conj " << i << ' ' << commutator_text(sw.conj_certs[i]) << '\n';
  }
  return kOk;
}

int cmd_claim1(const Context &c, const std::vector<std::string> &a) {
  const auto w = pg::claim1_transporter(c.clopen(a[0]), c.clopen(a[1]), c.clopen(a[2]));
  if (c.opt.json) {
    std::vector<pg::Certificate> certs{{w.cert, w.e}};
    if (!w.cert.empty()) certs.push_back({w.d_cert, w.cert.factors[0].y});
    c.out << pg::to_json(certs, 2) << '\n';
    return kOk;
  }
  c.out << "e " << w.e.str() << '\n' << "cert " << commutator_text(w.cert) << '\n';
  return kOk;
}

int cmd_claim2(const Context &c, const std::string &gs) {
  const auto g = c.element(gs);
  const auto fam = pg::min_cover_3(c.opt.arity);
  const auto members = fam.members();
  const auto f = pg::claim2_factorization(g, fam);
  if (c.opt.json) {
    std::vector<pg::FixingFactor> factors;
    for (int i = 0; i < 3; ++i) factors.push_back({f.s[i], members[f.fixed_member[i]]});
    return c.emit({factorization_cert(c.opt.arity, std::move(factors), g)});
  }
  for (int i = 0; i < 3; ++i) {
    c.out << 's' << i + 1 << ' ' << f.s[i].str() << " fixes " << member_name(f.fixed_member[i])
          << ' ' << members[f.fixed_member[i]].str() << '\n';
  }
  return kOk;
}

int cmd_claim3(const Context &c, const std::string &gs, const std::string &hs) {
  const auto g = c.element(gs), h = c.element(hs);
  const auto fam = pg::min_cover_3(c.opt.arity);
  const auto w = pg::claim3_witness(g, h, fam);
  if (c.opt.json) {
    const auto cg = pg::compose(w.c, g), ch = pg::compose(w.c, h);
    return c.emit({factorization_cert(c.opt.arity, {{cg, w.ia}}, cg),
                   factorization_cert(c.opt.arity, {{ch, w.ib}}, ch),
                   factorization_cert(c.opt.arity, {{w.c, w.ic}}, w.c)});
  }
  c.out << "c " << w.c.str() << '\n'
        << "IA " << w.ia.str() << '\n'
        << "IB " << w.ib.str() << '\n'
        << "IC " << w.ic.str() << '\n';
  for (const auto &e : w.f_table) c.out << "f " << member_name(e.member) << ' ' << e.f.str() << '\n';
  return kOk;
}

int cmd_chain(const Context &c, const std::string &ya, const std::string &yb) {
  const auto ch = pg::commuting_chain(c.clopen(ya), c.clopen(yb));
  c.out << "g " << ch.g.str() << '\n' << "h " << ch.h.str() << '\n';
  return kOk;
}

int cmd_verify(const Context &c, const std::string &path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(c.in), {});
  } else {
    std::ifstream file(path);
    if (!file) {
      c.err << "error: cannot read " << path << '\n';
      return kUsage;
    }
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  const auto certs = pg::parse_certificates(text);
  int failures = 0;
  for (std::size_t i = 0; i < certs.size(); ++i) {
    const auto v = pg::verify(certs[i]);
    if (v.ok) {
      c.out << "ok " << i << ' ' << certs[i].kind() << '\n';
    } else {
      ++failures;
      c.out << "FAIL " << i << ' ' << certs[i].kind() << ": " << v.reason << '\n';
    }
  }
  return failures == 0 ? kOk : kVerificationFailure;
}

int cmd_corpus(const Context &c) {
  pg::CorpusOptions opt{c.opt.seed, c.opt.arity, c.opt.depth, c.opt.orbit_window};
  bool all = true;
  for (const auto &r : pg::run_corpus(opt)) {
    all = all && r.passed();
    c.out << (r.passed() ? "PASS " : "FAIL ") << r.name << ' ' << r.cases - r.failures << '/'
          << r.cases << '\n';
    if (!r.passed()) c.out << "  " << r.first_failure << '\n';
  }
  return all ? kOk : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Witnesses and certificates for prefix-exchange groups of Cantor space", "pgw"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--arity", opt.arity, "Alphabet size k")->check(CLI::Range(2, 10));
  app.add_option("--seed", opt.seed, "Seed for random corpora");
  app.add_option("--depth", opt.depth, "Maximum tree depth of random elements")
      ->check(CLI::Range(1, 12));
  app.add_option("--orbit-window", opt.orbit_window, "Window |n| <= N for orbit checks")
      ->check(CLI::Range(1, 64));
  app.add_flag("--json", opt.json, "Emit JSON certificates");

  std::function<int(const Context &)> action;
  std::vector<std::string> pos;
  auto sub = [&](const char *name, const char *help, std::size_t nargs, const char *names,
                 std::function<int(const Context &)> fn) {
    auto *s = app.add_subcommand(name, help);
    if (nargs > 0) s->add_option("args", pos, names)->required()->expected(static_cast<int>(nargs))->allow_extra_args(false);
    s->callback([&action, fn] { action = fn; });
  };
  sub("reduce", "Print the reduced form of an element", 1, "G",
      [&](const Context &c) { return cmd_reduce(c, pos[0]); });
  {
    auto *s = app.add_subcommand("compose", "Product of elements, left to right");
    s->add_option("G", pos, "Elements")->required()->expected(1, 64);
    s->callback([&] { action = [&](const Context &c) { return cmd_compose(c, pos); }; });
  }
  sub("sigma", "The involution sigma(g, Y)", 2, "G Y",
      [&](const Context &c) { return cmd_sigma(c, pos[0], pos[1]); });
  sub("decompose2", "Write g as a product of two rigid-stabiliser elements", 1, "G",
      [&](const Context &c) { return cmd_decompose2(c, pos[0]); });
  sub("transporter", "An element mapping Y into O", 2, "Y O",
      [&](const Context &c) { return cmd_transporter(c, pos[0], pos[1]); });
  sub("wandering", "A wandering element for Y", 1, "Y",
      [&](const Context &c) { return cmd_wandering(c, pos[0]); });
  sub("join-compress", "An element compressing Y u Z into Y", 2, "Y Z",
      [&](const Context &c) { return cmd_join(c, pos[0], pos[1]); });
  sub("cover3", "The minimal three-element cover and its private sets", 0, "",
      [&](const Context &c) { return cmd_cover3(c); });
  sub("derived-conj", "A derived-subgroup element agreeing with g on W", 2, "G W",
      [&](const Context &c) { return cmd_derived(c, pos[0], pos[1]); });
  sub("monolith-witness", "Normal word over N evaluating to [A,B]", 5, "A YA B YB N",
      [&](const Context &c) { return cmd_monolith(c, pos); });
  sub("simple-witness", "As monolith-witness with N = [X,Y] and certified conjugators", 6,
      "A YA B YB X Y", [&](const Context &c) { return cmd_simple(c, pos); });
  sub("claim1", "Single commutator fixing IC and sending IA onto IB", 3, "IA IB IC",
      [&](const Context &c) { return cmd_claim1(c, pos); });
  sub("claim2", "Three-factor factorization over the minimal cover", 1, "G",
      [&](const Context &c) { return cmd_claim2(c, pos[0]); });
  sub("claim3", "Patch element and disjoint triple for a pair (g, h)", 2, "G H",
      [&](const Context &c) { return cmd_claim3(c, pos[0], pos[1]); });
  sub("chain", "Commuting chain for YA, YB", 2, "YA YB",
      [&](const Context &c) { return cmd_chain(c, pos[0], pos[1]); });
  {
    auto *s = app.add_subcommand("verify", "Re-check JSON certificates (file or -)");
    s->add_option("FILE", pos, "Certificate file")->required()->expected(1)->allow_extra_args(false);
    s->callback([&] { action = [&](const Context &c) { return cmd_verify(c, pos[0]); }; });
  }
  sub("corpus", "Run the seeded property suites", 0, "",
      [&](const Context &c) { return cmd_corpus(c); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kUsage;
  }

  const Context ctx{opt, in, out, err};
  try {
    return action(ctx);
  } catch (const pg::ParseError &e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const pg::Error &e) {
    err << to_string(e.kind()) << ": " << e.what() << '\n';
    return kPrecondition;
  }
}

}  // namespace pgw

#include "cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "stmax/catalog.hpp"
#include "stmax/errors.hpp"
#include "stmax/goettsche.hpp"
#include "stmax/hilb_square.hpp"
#include "stmax/involution.hpp"
#include "stmax/profile_io.hpp"
#include "stmax/simplicial.hpp"
#include "stmax/smith_core.hpp"
#include "stmax/smith_sequence.hpp"
#include "stmax/surface_profile.hpp"
#include "stmax/symmetric_square.hpp"

namespace stmax::cli {

namespace {

std::string join(const std::vector<long long>& v, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string join_str(const std::vector<std::string>& v, const char* sep = "; ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i];
  }
  return s;
}

template <typename It>
std::string join_range(It first, It last) {
  return join(std::vector<long long>(first, last));
}

// Records mode prints blank-line-delimited blocks of `key = value` lines,
// the same line syntax the profile parser reads.
struct Sink {
  std::ostream& out;
  bool records;

  void kv(const std::string& key, const std::string& value) {
    out << key << (records ? " = " : ": ") << value << "\n";
  }
  void kv(const std::string& key, const char* value) { kv(key, std::string(value)); }
  void kv(const std::string& key, long long value) { kv(key, std::to_string(value)); }
  void kv(const std::string& key, bool value) { kv(key, std::string(value ? "true" : "false")); }
  void end_record() { out << "\n"; }
};

struct Checker {
  Sink& sink;
  bool all_ok = true;

  void check(const std::string& desc, bool ok) {
    all_ok = all_ok && ok;
    if (sink.records) {
      sink.kv("check", desc);
      sink.kv("result", std::string(ok ? "pass" : "fail"));
      sink.end_record();
    } else {
      sink.out << (ok ? "ok:   " : "FAIL: ") << desc << "\n";
    }
  }
};

std::array<long long, 5> parse_betti_csv(const std::string& text) {
  std::array<long long, 5> b{};
  std::size_t count = 0;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto a = item.find_first_not_of(" \t");
    auto z = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw ParseError("--betti: empty entry");
    item = item.substr(a, z - a + 1);
    long long v = 0;
    auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || p != item.data() + item.size())
      throw ParseError("--betti: not an integer: '" + item + "'");
    if (count >= 5) throw ParseError("--betti: expected exactly 5 integers");
    b[count++] = v;
  }
  if (count != 5) throw ParseError("--betti: expected exactly 5 integers");
  return b;
}

int cmd_analyze(const std::string& path, Sink& sink) {
  ProfileDocument doc = parse_profile_document_file(path);
  require_valid(doc.profile);
  SmithReport rep = smith_defect(doc.profile);
  sink.kv("profile", doc.profile.name);
  sink.kv("beta_star_x", rep.beta_star_x);
  sink.kv("beta_star_r", rep.beta_star_r);
  sink.kv("defect", rep.defect);
  sink.kv("maximal", rep.maximal);
  if (rep.comessatti_ok) sink.kv("comessatti_ok", *rep.comessatti_ok);
  if (rep.hodge_component_bound)
    sink.kv("hodge_component_bound", *rep.hodge_component_bound);
  auto violations = maximality_consistency_violations(doc.profile);
  sink.kv("consistency", violations.empty() ? std::string("ok") : join_str(violations));
  if (sink.records) sink.end_record();
  return 0;
}

int cmd_hilb2(const std::string& path, Sink& sink) {
  ProfileDocument doc = parse_profile_document_file(path);
  require_valid(doc.profile);
  Hilb2Report rep = hilb2_verdict(doc.profile, doc.facts);
  sink.kv("profile", doc.profile.name);
  sink.kv("beta_star_hilb2", std::to_string(rep.beta_star_hilb2_c) +
                                 (rep.beta_star_exact ? "" : " (lower bound; 2-torsion present)"));
  if (rep.beta_star_hilb2_fact) sink.kv("beta_star_hilb2_fact", *rep.beta_star_hilb2_fact);
  sink.kv("chi_hilb2_real", rep.chi_hilb2_r);
  sink.kv("required_beta1", rep.required_beta1);
  if (rep.actual_beta1) sink.kv("actual_beta1", *rep.actual_beta1);
  if (rep.defect) sink.kv("defect", *rep.defect);
  if (rep.beta_hilb2_r)
    sink.kv("betti_hilb2_real",
            join_range(rep.beta_hilb2_r->begin(), rep.beta_hilb2_r->end()));
  sink.kv("verdict", to_string(rep.verdict.decision));
  if (!rep.verdict.rule.empty()) sink.kv("rule", rep.verdict.rule);
  if (!rep.verdict.notes.empty()) sink.kv("notes", rep.verdict.notes);
  if (sink.records) sink.end_record();
  return 0;
}

int cmd_goettsche(const std::string& betti_csv, int nmax, Sink& sink) {
  auto b = parse_betti_csv(betti_csv);
  BettiSeries series = hilb_betti_series(b, nmax);
  if (sink.records) {
    for (int n = 1; n <= nmax; ++n) {
      for (std::size_t i = 0; i < series.rows[n].size(); ++i) {
        sink.kv("n", static_cast<long long>(n));
        sink.kv("i", static_cast<long long>(i));
        sink.kv("value", series.rows[n][i].str());
        sink.end_record();
      }
    }
  } else {
    sink.out << "betti: " << join_range(b.begin(), b.end()) << "\n";
    for (int n = 1; n <= nmax; ++n) {
      sink.out << "n=" << n << ":";
      for (const auto& c : series.rows[n]) sink.out << " " << c.str();
      sink.out << "  (sum " << series.row_sum(n).str() << ")\n";
    }
  }
  return 0;
}

void verify_smith(Checker& ck) {
  {
    SimplicialInvolution inv(octahedron(), {0, 1, 2, 3, 5, 4});
    SmithData data = smith_sequence(inv);
    ck.check("smith: equatorial reflection on the octahedron needs no subdivision",
             data.subdivisions == 0);
    ck.check("smith: equatorial fixed locus is a circle",
             data.betti_f == std::vector<long long>({1, 1, 0}));
    ck.check("smith: equatorial reflection is maximal (beta check)",
             data.beta_star_f() == data.beta_star_x());
    ck.check("smith: equatorial reflection passes the exactness criterion",
             maximality_exactness(inv));
  }
  {
    SimplicialInvolution inv(octahedron(), {1, 0, 3, 2, 5, 4});
    SmithData data = smith_sequence(inv);
    ck.check("smith: antipodal map has empty fixed locus", data.beta_star_f() == 0);
    ck.check("smith: antipodal orbit space is the projective plane",
             data.betti_xbar_f == std::vector<long long>({1, 1, 1}));
    ck.check("smith: antipodal defect is 2",
             data.beta_star_x() - data.beta_star_f() == 2);
    ck.check("smith: antipodal map fails the exactness criterion",
             !maximality_exactness(inv));
  }
  {
    std::vector<std::int32_t> id7(7);
    std::iota(id7.begin(), id7.end(), 0);
    SimplicialInvolution inv(torus_7(), id7);
    SmithData data = smith_sequence(inv);
    ck.check("smith: identity involution is maximal with F = X",
             maximality_exactness(inv) && data.betti_f == data.betti_x);
  }
  {
    SimplicialInvolution inv(cycle_complex(4), {1, 0, 3, 2});
    SmithData data = smith_sequence(inv);
    ck.check("smith: edge reflection of the square needs one subdivision",
             data.subdivisions == 1);
    ck.check("smith: edge reflection of the square is maximal (two fixed points)",
             data.beta_star_f() == 2 && maximality_exactness(inv));
  }
  {
    SimplicialInvolution inv(cycle_complex(6), {3, 4, 5, 0, 1, 2});
    std::vector<std::int32_t> cycle{inv.quotient_edge_orbit(0, 1),
                                    inv.quotient_edge_orbit(1, 2),
                                    inv.quotient_edge_orbit(2, 3)};
    ck.check("cover: hexagon over triangle has nontrivial class on the generator",
             double_cover_class_eval(inv, cycle) == 1);
    ck.check("cover: quotient Euler characteristic is half of the cover's",
             inv.quotient_chain_complex().euler() * 2 == inv.complex().chain_complex().euler());
  }
  {
    SimplicialComplex two = SimplicialComplex::disjoint_union(cycle_complex(3), cycle_complex(3));
    SimplicialInvolution inv(two, {3, 4, 5, 0, 1, 2});
    std::vector<std::int32_t> cycle{inv.quotient_edge_orbit(0, 1),
                                    inv.quotient_edge_orbit(1, 2),
                                    inv.quotient_edge_orbit(0, 2)};
    ck.check("cover: two disjoint copies carry the trivial class",
             double_cover_class_eval(inv, cycle) == 0);
  }
  {
    // Torus as a hexagon times triangle of cells; deck action shifts the
    // hexagon halfway. Cell (a, b) of the product has id 6a + b.
    CellPoset prod = CellPoset::product(cycle_poset(6), cycle_poset(3));
    SimplicialComplex D = order_complex(prod);
    std::vector<std::int32_t> vm(prod.size());
    for (std::int32_t a = 0; a < 12; ++a) {
      std::int32_t ia = a < 6 ? (a + 3) % 6 : 6 + (a - 6 + 3) % 6;
      for (std::int32_t b = 0; b < 6; ++b) vm[a * 6 + b] = ia * 6 + b;
    }
    SimplicialInvolution inv(D, vm);
    auto orb = [&](std::int32_t u, std::int32_t v) { return inv.quotient_edge_orbit(u, v); };
    std::vector<std::int32_t> along{orb(0, 36), orb(36, 6),  orb(6, 42),
                                    orb(42, 12), orb(12, 48), orb(48, 18)};
    std::vector<std::int32_t> across{orb(0, 3), orb(3, 1), orb(1, 4),
                                     orb(4, 2), orb(2, 5), orb(5, 0)};
    ck.check("cover: torus unwinds along the deck direction",
             double_cover_class_eval(inv, along) == 1);
    ck.check("cover: torus stays split across the deck direction",
             double_cover_class_eval(inv, across) == 0);
    ck.check("cover: torus quotient Euler characteristic is half of the cover's",
             inv.quotient_chain_complex().euler() * 2 == D.chain_complex().euler());
  }
}

void verify_symsq(Checker& ck) {
  ck.check("symsq: sphere gives (1, 0, 1, 0, 1)",
           symmetric_square_oracle(RealComponent::sphere()) ==
               std::vector<long long>({1, 0, 1, 0, 1}));
  ck.check("symsq: torus gives (1, 2, 2, 2, 1)",
           symmetric_square_oracle(RealComponent::orientable_genus(1)) ==
               std::vector<long long>({1, 2, 2, 2, 1}));
  ck.check("symsq: projective plane gives (1, 1, 1, 1, 1)",
           symmetric_square_oracle(RealComponent::nonorientable_crosscaps(1)) ==
               std::vector<long long>({1, 1, 1, 1, 1}));
  ck.check("symsq: Klein bottle gives (1, 2, 2, 2, 1)",
           symmetric_square_oracle(RealComponent::nonorientable_crosscaps(2)) ==
               std::vector<long long>({1, 2, 2, 2, 1}));
  ck.check("symsq: circle gives the Moebius band (1, 1, 0)",
           symmetric_square_circle() == std::vector<long long>({1, 1, 0}));
}

void verify_identities(Checker& ck) {
  {
    bool ok = true;
    for (long long b1 = 0; b1 <= 4 && ok; ++b1)
      for (long long b2 = 0; b2 <= 12 && ok; ++b2)
        ok = check_cx_relation({1, b1, b2, b1, 1});
    ck.check("identities: series total at n = 2 matches the closed formula "
             "(grid b1 <= 4, b2 <= 12)", ok);
  }
  {
    BettiSeries s = hilb_betti_series({1, 0, 22, 0, 1}, 3);
    bool ok = true;
    for (long long n = 1; n <= 3 && ok; ++n) {
      const auto& row = s.rows[n];
      for (std::size_t i = 0; i < row.size(); ++i)
        ok = ok && row[i] == row[row.size() - 1 - i];
    }
    ck.check("identities: series rows are palindromic (duality)", ok);
  }
  {
    // For maximal torsion-free X: beta*(Y) - chi(Y(R)) = 4 * required beta1,
    // since a closed 4-manifold M has beta*(M) - chi(M) = 4 b1(M).
    bool ok = true;
    for (const CatalogEntry& e : builtin_catalog()) {
      if (e.profile.tors2_hstar || !smith_defect(e.profile).maximal) continue;
      Hilb2Report rep = hilb2_verdict(e.profile, e.facts);
      auto [total, exact] = beta_star_hilb2_complex(e.profile);
      ok = ok && exact && 4 * rep.required_beta1 == total - rep.chi_hilb2_r;
    }
    ck.check("identities: required beta1 is a quarter of beta* minus chi "
             "(maximal torsion-free catalog entries)", ok);
  }
  {
    bool ok = true;
    for (const CatalogEntry& e : builtin_catalog()) {
      SmithReport rep = smith_defect(e.profile);
      ok = ok && rep.defect >= 0 && rep.defect % 2 == 0;
      ok = ok && maximality_consistency_violations(e.profile).empty();
    }
    ck.check("identities: every catalog profile passes the parity and "
             "consistency screens", ok);
  }
  {
    auto pillow = pillow_sphere();
    SimplicialComplex s2 = order_complex(pillow);
    ck.check("identities: sphere-squared homology matches the degree-wise product",
             product_betti(pillow, pillow) == kunneth_product(s2, s2));
  }
}

int cmd_verify(const std::string& suite, Sink& sink) {
  Checker ck{sink};
  if (suite == "smith" || suite == "all") verify_smith(ck);
  if (suite == "symsq" || suite == "all") verify_symsq(ck);
  if (suite == "identities" || suite == "all") verify_identities(ck);
  if (!sink.records)
    sink.out << (ck.all_ok ? "all checks passed" : "some checks FAILED") << "\n";
  return ck.all_ok ? 0 : 1;
}

int cmd_catalog(const std::string& filter, Sink& sink) {
  bool all_agree = true;
  bool any = false;
  for (const CatalogResult& r : run_catalog()) {
    if (!filter.empty() && r.entry.name.find(filter) == std::string::npos) continue;
    any = true;
    all_agree = all_agree && r.agree;
    if (sink.records) {
      sink.kv("name", r.entry.name);
      sink.kv("expected_decision", to_string(r.entry.expected_decision));
      sink.kv("expected_rule", r.entry.expected_rule);
      sink.kv("computed_decision", to_string(r.computed.verdict.decision));
      sink.kv("computed_rule", r.computed.verdict.rule);
      sink.kv("agree", r.agree);
      sink.end_record();
    } else {
      sink.out << r.entry.name << ": expected " << to_string(r.entry.expected_decision)
               << ", computed " << to_string(r.computed.verdict.decision) << " ["
               << r.computed.verdict.rule << "] -> "
               << (r.agree ? "agree" : "DISAGREE") << "\n";
    }
  }
  if (!any) {
    sink.out << "no catalog entry matches '" << filter << "'\n";
    return 2;
  }
  if (!sink.records)
    sink.out << (all_agree ? "catalog agrees" : "catalog DISAGREES") << "\n";
  return all_agree ? 0 : 1;
}

int cmd_export_catalog(const std::string& dir, Sink& sink) {
  std::filesystem::create_directories(dir);
  for (const CatalogEntry& e : builtin_catalog()) {
    std::filesystem::path path = std::filesystem::path(dir) / (e.name + ".profile");
    std::ofstream out(path);
    if (!out) throw ResourceError("cannot write " + path.string());
    out << render_profile_document(ProfileDocument{e.profile, e.facts});
    sink.kv("wrote", path.string());
    if (sink.records) sink.end_record();
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Smith-Thom maximality of real surfaces and their Hilbert squares"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output mode")
      ->check(CLI::IsMember({"text", "records"}));

  std::string analyze_file, hilb2_file, betti_csv, suite = "all", filter, export_dir;
  int nmax = 2;

  CLI::App* analyze = app.add_subcommand("analyze", "Smith-Thom report for a profile file");
  analyze->add_option("file", analyze_file, "Profile file")->required();

  CLI::App* hilb2 = app.add_subcommand("hilb2", "Hilbert-square maximality verdict");
  hilb2->add_option("file", hilb2_file, "Profile file")->required();

  CLI::App* goe = app.add_subcommand("goettsche", "Betti numbers of Hilbert powers");
  goe->add_option("--betti", betti_csv, "b0,b1,b2,b3,b4 of the surface")->required();
  goe->add_option("--nmax", nmax, "Largest Hilbert power")->required();

  CLI::App* verify = app.add_subcommand("verify", "Run the built-in oracle suites");
  verify->add_option("--suite", suite, "smith, symsq, identities or all")
      ->check(CLI::IsMember({"smith", "symsq", "identities", "all"}));

  CLI::App* catalog = app.add_subcommand("catalog", "Compare catalog verdicts");
  catalog->add_option("--filter", filter, "Only entries whose name contains this");

  CLI::App* exp = app.add_subcommand("export-catalog", "Write catalog entries as profile files");
  exp->add_option("dir", export_dir, "Output directory")->required();

  std::vector<const char*> argv;
  argv.push_back("stmax");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Sink sink{out, format == "records"};
  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(analyze_file, sink);
    if (app.got_subcommand(hilb2)) return cmd_hilb2(hilb2_file, sink);
    if (app.got_subcommand(goe)) return cmd_goettsche(betti_csv, nmax, sink);
    if (app.got_subcommand(verify)) return cmd_verify(suite, sink);
    if (app.got_subcommand(catalog)) return cmd_catalog(filter, sink);
    if (app.got_subcommand(exp)) return cmd_export_catalog(export_dir, sink);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace stmax::cli

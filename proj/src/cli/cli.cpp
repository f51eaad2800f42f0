#include "hkquot/cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "hkquot/moduli_mirror.hpp"
#include "hkquot/quotient_diamonds.hpp"
#include "hkquot/riemann_roch.hpp"
#include "hkquot/singularity.hpp"
#include "hkquot/verify.hpp"
#include "render.hpp"

namespace hkq {

namespace {

using cli::Cell;
using cli::Output;
using cli::Table;
using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Output whose json form is the single row of `t` as an object.
Output object_output(Table t) {
  Output o;
  o.json = cli::table_json(t).at(0);
  o.tables.push_back(std::move(t));
  return o;
}

Output tables_output(std::vector<Table> tables) {
  Output o;
  o.json = cli::tables_json(tables);
  o.tables = std::move(tables);
  return o;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::array<int, 4> four(const std::vector<int>& v, const char* flag) {
  if (v.size() != 4) throw UsageError(std::string(flag) + " takes exactly four integers");
  return {v[0], v[1], v[2], v[3]};
}

int required(const std::optional<int>& v, const char* flag, const std::string& kind) {
  if (!v) throw UsageError(kind + " requires " + flag);
  return *v;
}

Output appendix_output() {
  Table t{"appendix", {"N", "Nprime", "h11", "h21", "h31", "h22"}, {}};
  for (const auto& inv : enumerate_admissible()) {
    const auto d = ys_diamond(inv.N, inv.Nprime);
    t.rows.push_back({std::int64_t{inv.N}, std::int64_t{inv.Nprime}, std::int64_t{d.h11()},
                      std::int64_t{d.h21()}, std::int64_t{d.h31()}, std::int64_t{d.h22()}});
  }
  return tables_output({std::move(t)});
}

Output diamond_output(const CalabiYau4Diamond& d, const std::optional<KummerQuotient>& kummer) {
  const auto& h = d.diamond();
  Output o;
  o.json = ordered_json{{"h00", h.h00()}, {"h10", h.h10()}, {"h20", h.h20()},
                        {"h11", h.h11()}, {"h30", h.h30()}, {"h21", h.h21()},
                        {"h40", h.h40()}, {"h31", h.h31()}, {"h22", h.h22()},
                        {"euler", d.euler()}};
  const auto full = h.expand();
  o.json["expanded"] = full;

  o.tables.push_back({"compact",
                      {"h11", "h21", "h31", "h22", "euler"},
                      {{std::int64_t{d.h11()}, std::int64_t{d.h21()}, std::int64_t{d.h31()},
                        std::int64_t{d.h22()}, std::int64_t{d.euler()}}}});
  Table ex{"expanded", {"p", "q=0", "q=1", "q=2", "q=3", "q=4"}, {}};
  for (int p = 0; p < 5; ++p) {
    std::vector<Cell> row{std::int64_t{p}};
    for (int q = 0; q < 5; ++q) row.emplace_back(std::int64_t{full[p][q]});
    ex.rows.push_back(std::move(row));
  }
  o.tables.push_back(std::move(ex));

  if (kummer) {
    const auto& t = kummer->tabulated;
    o.json["tabulated"] = ordered_json{
        {"h11", t.h11()}, {"h21", t.h21()}, {"h31", t.h31()}, {"h22", t.h22()}};
    o.json["match"] = kummer->match();
    o.tables.push_back({"tabulated",
                        {"h11", "h21", "h31", "h22", "match"},
                        {{std::int64_t{t.h11()}, std::int64_t{t.h21()}, std::int64_t{t.h31()},
                          std::int64_t{t.h22()}, kummer->match()}}});
  }
  return o;
}

Output verify_output(const VerificationReport& rep) {
  Table checks{"checks", {"check", "passed", "detail"}, {}};
  for (const auto& c : rep.checks) checks.rows.push_back({c.name, c.passed, c.detail});
  Table tensions{"tensions", {"location", "fixture", "recomputed", "match"}, {}};
  for (const auto& t : rep.tensions)
    tensions.rows.push_back({t.location, t.fixture, t.recomputed, t.match});

  Output o;
  o.json = ordered_json::object();
  o.json["ok"] = rep.ok();
  o.json["checks"] = cli::table_json(checks);
  o.json["tensions"] = cli::table_json(tensions);
  o.tables = {std::move(checks), std::move(tensions)};
  return o;
}

Output singularity_output(int p, const std::vector<int>& exps, std::optional<int> n,
                          bool symplectic) {
  const LocalSpectrum s(p, exps);
  Table t{"singularity", {"p", "exponents", "age", "class"}, {}};
  std::vector<Cell> row{std::int64_t{p}, join(exps), age(s), std::string(to_string(classify(s)))};
  if (n) {
    const auto v = validate_spectrum(s, *n, symplectic);
    t.columns.insert(t.columns.end(), {"n", "symplectic", "valid", "violations"});
    std::string msgs;
    for (const auto& m : v.violations) msgs += (msgs.empty() ? "" : "; ") + m;
    row.insert(row.end(), {std::int64_t{*n}, symplectic, v.ok(), msgs});
  }
  t.rows.push_back(std::move(row));
  return object_output(std::move(t));
}

Output deform_output(int N, int Nprime) {
  Table def{"deformations", {"object", "dimension"}, {}};
  for (const auto& r : deform_dims(N, Nprime)) def.rows.push_back({r.object, std::int64_t{r.value}});
  Table kah{"kahler", {"object", "dimension"}, {}};
  for (const auto& r : kahler_dims(N, Nprime)) kah.rows.push_back({r.object, std::int64_t{r.value}});
  Table rel{"relations", {"relation", "holds", "equality", "equality_expected"}, {}};
  for (const auto& r : deform_relations(N, Nprime))
    rel.rows.push_back({r.statement, r.relation_holds, r.equality, r.expected_equality});
  return tables_output({std::move(def), std::move(kah), std::move(rel)});
}

Output chi_output(const std::string& quantity, const Rational& value) {
  return object_output({"chi", {"quantity", "value"}, {{quantity, value}}});
}

Rational rational_flag(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": '" + text + "' is not a rational number");
  }
}

std::string fixture_family_name(const std::string& key) {
  if (key == "u2") return "U2";
  if (key == "u") return "U";
  return key;
}

Output fixtures_output(const std::string& family) {
  Table t{"fixtures", {"family", "value", "expected", "recomputed", "match", "hard"}, {}};
  for (const auto& fam : family_fixtures()) {
    if (family != "all" && fam.name != fixture_family_name(family)) continue;
    for (const auto& v : fam.values)
      t.rows.push_back({fam.name, v.key, v.expected, v.recomputed, v.match(), v.hard});
  }
  return tables_output({std::move(t)});
}

}  // namespace

std::vector<YsTableRow> parse_appendix_csv(std::string_view text) {
  std::vector<YsTableRow> rows;
  std::size_t pos = 0;
  bool header = true;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (header) {
      if (line != "N,Nprime,h11,h21,h31,h22")
        throw std::invalid_argument("unexpected header '" + std::string(line) + "'");
      header = false;
      continue;
    }
    std::array<int, 6> v{};
    std::size_t field = 0;
    const char* p = line.data();
    const char* last = line.data() + line.size();
    while (true) {
      if (field == v.size()) throw std::invalid_argument("too many fields: " + std::string(line));
      auto [q, ec] = std::from_chars(p, last, v[field]);
      if (ec != std::errc{}) throw std::invalid_argument("bad integer in: " + std::string(line));
      ++field;
      if (q == last) break;
      if (*q != ',') throw std::invalid_argument("bad separator in: " + std::string(line));
      p = q + 1;
    }
    if (field != v.size()) throw std::invalid_argument("too few fields: " + std::string(line));
    rows.push_back({v[0], v[1], v[2], v[3], v[4], v[5]});
  }
  if (header) throw std::invalid_argument("missing header");
  return rows;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run_cli(args, out, err, reference_ys_table());
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::vector<YsTableRow>& reference) {
  CLI::App app{"Hodge numbers and Riemann-Roch data of Calabi-Yau quotients of hyperkahler 4-folds",
               "hkquot"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "md", "tex"}))
      ->capture_default_str();

  std::function<Output()> action;
  int status = kExitOk;

  auto* appendix = app.add_subcommand("appendix", "Hodge numbers of Y_S for every admissible (N, N')");
  appendix->callback([&] { action = appendix_output; });

  auto* diamond = app.add_subcommand("diamond", "Hodge diamond of one quotient");
  std::string kind;
  std::optional<int> n, nprime, t11, index;
  int c = 0, d = 0;
  std::vector<int> tvec, fvec;
  diamond->add_option("kind", kind, "ys, zs, k3type, general, kummer or epw")
      ->required()
      ->check(CLI::IsMember({"ys", "zs", "k3type", "general", "kummer", "epw"}));
  diamond->add_option("--n", n, "Number of fixed curves N");
  diamond->add_option("--nprime", nprime, "Total genus N'");
  diamond->add_option("--t11", t11, "Invariant h11 (k3type)");
  diamond->add_option("--c", c, "Summed h10 of the fixed locus (k3type)");
  diamond->add_option("--d", d, "Summed h20 of the fixed locus (k3type)");
  diamond->add_option("--t", tvec, "Invariant dims t11,t21,t31,t22 (general)")->delimiter(',');
  diamond->add_option("--f", fvec, "Fixed-locus sums b,c,d,e (general)")->delimiter(',');
  diamond->add_option("--index", index, "Kummer family 1, 2 or 3");
  diamond->callback([&] {
    action = [&]() -> Output {
      if (kind == "ys" || kind == "zs") {
        const int N = required(n, "--n", kind), Np = required(nprime, "--nprime", kind);
        return diamond_output(kind == "ys" ? ys_diamond(N, Np) : zs_diamond(N, Np), {});
      }
      if (kind == "k3type") return diamond_output(cy_k3type(required(t11, "--t11", kind), c, d), {});
      if (kind == "general") {
        const auto t = four(tvec, "--t");
        const auto f = four(fvec, "--f");
        return diamond_output(cy_general({t[0], t[1], t[2], t[3]}, {f[0], f[1], f[2], f[3]}), {});
      }
      if (kind == "kummer") {
        const int i = required(index, "--index", kind);
        const auto all = kummer_diamonds();
        if (i < 1 || i > static_cast<int>(all.size()))
          throw DomainError("Kummer family index must be 1, 2 or 3");
        return diamond_output(all[i - 1].recomputed, all[i - 1]);
      }
      return diamond_output(epw_diamond(), {});
    };
  });

  auto* verify = app.add_subcommand("verify", "Run every cross-check and report known tensions");
  verify->callback([&] {
    action = [&]() -> Output {
      const auto rep = run_verification(reference);
      if (!rep.ok()) status = kExitVerification;
      return verify_output(rep);
    };
  });

  auto* sing = app.add_subcommand("singularity", "Age and type of a cyclic quotient singularity");
  int p = 0;
  std::vector<int> exps;
  std::optional<int> sing_n;
  bool symplectic = false;
  sing->add_option("--p", p, "Prime order")->required();
  sing->add_option("--exp", exps, "Eigenvalue exponents a_i")->required()->delimiter(',');
  sing->add_option("--n", sing_n, "Half the ambient dimension; enables shape validation");
  sing->add_flag("--symplectic", symplectic, "Validate against the symplectic shapes");
  sing->callback([&] { action = [&] { return singularity_output(p, exps, sing_n, symplectic); }; });

  auto* deform = app.add_subcommand("deform", "Deformation and Kahler dimensions");
  int dn = 0, dnp = 0;
  deform->add_option("--n", dn, "N")->required();
  deform->add_option("--nprime", dnp, "N'")->required();
  deform->callback([&] { action = [&] { return deform_output(dn, dnp); }; });

  auto* mirror = app.add_subcommand("mirror", "Hodge-level mirror checks");
  mirror->require_subcommand(1);
  bool hodge_only = false;
  auto convention = [&] {
    return hodge_only ? MirrorConvention::HodgeOnly : MirrorConvention::Strict;
  };
  auto* scan = mirror->add_subcommand("scan-ys", "Mirror pairs among the Y_S diamonds");
  scan->add_flag("--hodge-only", hodge_only, "Ignore h21");
  scan->callback([&] {
    action = [&] {
      Table t{"mirror_pairs", {"N", "Nprime", "mirror_N", "mirror_Nprime"}, {}};
      for (const auto& [a, b] : mirror_scan_ys(convention()))
        t.rows.push_back({std::int64_t{a.first}, std::int64_t{a.second}, std::int64_t{b.first},
                          std::int64_t{b.second}});
      return tables_output({std::move(t)});
    };
  });
  auto* zs = mirror->add_subcommand("zs", "Z_S(N, N') against Z_S(N', N)");
  zs->callback([&] {
    action = [&] {
      Table t{"zs_mirror", {"N", "Nprime", "mirror"}, {}};
      for (const auto& [pr, ok] : zs_mirror_checks())
        t.rows.push_back({std::int64_t{pr.first}, std::int64_t{pr.second}, ok});
      return tables_output({std::move(t)});
    };
  });
  auto* ow = mirror->add_subcommand("ow", "Ohashi-Wandel quotient against Y_S(10, 2)");
  ow->callback([&] {
    action = [&] {
      const auto r = ow_counterexample();
      return object_output({"ow",
                            {"ow_h11", "ys_h31", "mirror_possible"},
                            {{std::int64_t{r.ow_h11}, std::int64_t{r.ys_h31}, r.mirror_possible()}}});
    };
  });
  auto* pr = mirror->add_subcommand("pair", "Compare two diamonds given as h11,h21,h31,h22");
  std::vector<int> da, db;
  pr->add_option("--a", da, "First diamond")->required()->delimiter(',');
  pr->add_option("--b", db, "Second diamond")->required()->delimiter(',');
  pr->add_flag("--hodge-only", hodge_only, "Ignore h21");
  pr->callback([&] {
    action = [&] {
      const auto a = four(da, "--a"), b = four(db, "--b");
      const CalabiYau4Diamond x{a[0], a[1], a[2], a[3]}, y{b[0], b[1], b[2], b[3]};
      return object_output({"pair", {"mirror"}, {{is_mirror(x, y, convention())}}});
    };
  });

  auto* chi = app.add_subcommand("chi", "Euler characteristics of line bundles");
  chi->require_subcommand(1);
  std::int64_t x1 = 0, x2 = 0, x3 = 0;
  std::string chid;

  auto* c1zero = chi->add_subcommand("c1zero", "D^4/24 + D^2.c2/24 + chi(O)");
  c1zero->add_option("--d4", x1)->required();
  c1zero->add_option("--d2c2", x2)->required();
  c1zero->add_option("--chio", x3)->required();
  c1zero->callback([&] { action = [&] { return chi_output("chi_c1_zero", chi_c1_zero(x1, x2, x3)); }; });

  auto* k3t = chi->add_subcommand("k3type", "(q+4)(q+6)/8 on a K3^[2]-type 4-fold");
  k3t->add_option("--q", x1)->required();
  k3t->callback([&] { action = [&] { return chi_output("chi_k3type", chi_k3type(x1)); }; });

  auto* box = chi->add_subcommand("box", "chi of an exterior product");
  box->add_option("--chi1", x1)->required();
  box->add_option("--chi2", x2)->required();
  box->callback([&] { action = [&] { return chi_output("chi_box", chi_box(x1, x2)); }; });

  auto* k3s = chi->add_subcommand("k3surface", "D^2/2 + 2 on a K3 surface");
  k3s->add_option("--d2", x1)->required();
  k3s->callback([&] { action = [&] { return chi_output("chi_k3_surface", chi_k3_surface(x1)); }; });

  auto* lift = chi->add_subcommand("lift", "chi on the resolution of a double-cover quotient");
  lift->add_option("--chid", chid, "chi(D) upstairs, p or p/q")->required();
  lift->add_option("--sq", x1, "Square of D on the fixed locus")->required();
  lift->add_option("--cov", x2, "chi(O) of the cover")->required();
  lift->add_option("--cox", x3, "chi(O) of the resolution")->required();
  lift->callback([&] {
    action = [&] {
      return chi_output("chi_lift", chi_lift(rational_flag(chid, "--chid"), x1, x2, x3));
    };
  });

  auto* hh = chi->add_subcommand("h0-hilb2", "h0 of H on S^[2]");
  hh->add_option("--hh", x1, "H.H on S")->required();
  hh->callback([&] { action = [&] { return chi_output("h0_hilb2", h0_hilb2(x1)); }; });

  auto* hz = chi->add_subcommand("h0-z", "h0 of H on Z");
  hz->add_option("--h0", x1, "h0(H) on S")->required();
  hz->add_option("--hsigma", x2, "h_Sigma on S x S")->required();
  hz->callback([&] { action = [&] { return chi_output("h0_Z", h0_Z(x1, x2)); }; });

  auto* hy = chi->add_subcommand("h0-y", "h0 of H on Y");
  hy->add_option("--h0", x1, "h0(H) on S")->required();
  hy->add_option("--hsigma", x2, "h_Sigma on S x S")->required();
  hy->add_option("--hsigmaz", x3, "h_Sigma on Z")->required();
  hy->callback([&] { action = [&] { return chi_output("h0_Y", h0_Y(x1, x2, x3)); }; });

  auto* fixtures = app.add_subcommand("fixtures", "Lattice families with transcribed and recomputed values");
  std::string family = "all";
  fixtures->add_option("family", family, "deg2, u2, u or all")
      ->check(CLI::IsMember({"deg2", "u2", "u", "all"}));
  fixtures->callback([&] { action = [&] { return fixtures_output(family); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto fmt = format == "csv"  ? cli::OutputFormat::csv
                   : format == "md" ? cli::OutputFormat::md
                   : format == "tex" ? cli::OutputFormat::tex
                                     : cli::OutputFormat::json;
  std::string text;
  try {
    text = cli::render(action(), fmt);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  out << text;
  return status;
}

}  // namespace hkq

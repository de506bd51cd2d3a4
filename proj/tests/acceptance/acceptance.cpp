#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "orbicoh/cli.hpp"
#include "orbicoh/cohomology.hpp"
#include "orbicoh/models.hpp"
#include "orbicoh/orbifold.hpp"
#include "orbicoh/smith.hpp"

using namespace orbicoh;

namespace {

FinAbGroup G(std::size_t free, std::vector<std::pair<long, std::size_t>> powers = {}) {
  return FinAbGroup::from_powers(free, powers);
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct Check {
  bool ok = true;
  std::ostringstream detail;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int number, const std::string& title, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < 60.0, "time limit");
  if (!c.ok) ++failures;
  std::cout << (c.ok ? "PASS" : "FAIL") << " " << number << " " << title << c.detail.str() << " (" << std::fixed
            << std::setprecision(2) << secs << " s)" << std::endl;
}

OrbifoldModel y1() { return cli::load_model("Y1"); }
OrbifoldModel y2() { return cli::load_model("Y2"); }

std::string show(const std::vector<FinAbGroup>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out;
}

}  // namespace

int main() {
  criterion(1, "Y1 integral table through degree 8", [](Check& c) {
    cli::JobSpec spec;
    spec.model = "Y1";
    spec.max_degree = 8;
    auto doc = cli::run_command(spec);
    const std::vector<FinAbGroup> expected{G(1),
                                           G(0),
                                           G(5, {{4, 1}, {2, 4}}),
                                           G(4, {{2, 4}}),
                                           G(5, {{4, 4}, {2, 14}}),
                                           G(0, {{2, 12}}),
                                           G(1, {{4, 7}, {2, 20}}),
                                           G(0, {{2, 12}}),
                                           G(0, {{4, 8}, {2, 20}})};
    E2Result e2 = e2_assembly(y1().lattice, 8);
    c.expect(e2.totals == expected, "got " + show(e2.totals));
    for (std::size_t k = 0; k <= 8; ++k)
      c.expect(doc.result["degrees"][k]["e2"] == cli::to_json(expected[k]), "report row " + std::to_string(k));
  });

  criterion(2, "Y1 gerbes", [](Check& c) {
    GerbeGroups g = gerbe_groups(y1());
    c.expect(g.flat.to_string() == "U(1)^5 + (Z/2)^4", "FGb = " + g.flat.to_string());
    c.expect(g.gerbes == G(4, {{2, 4}}), "Gb = " + g.gerbes.to_string());
  });

  criterion(3, "H^i(Z/4, Z | M1 | M2 | P), periodic to 6 and bar to 3", [](Check& c) {
    const FinAbGroup O;
    const std::vector<FinAbGroup> z{G(1), O, G(0, {{4, 1}}), O, G(0, {{4, 1}}), O, G(0, {{4, 1}})};
    const std::vector<FinAbGroup> m{O, G(0, {{2, 1}}), O, G(0, {{2, 1}}), O, G(0, {{2, 1}}), O};
    const std::vector<FinAbGroup> p{G(1), O, G(0, {{2, 1}}), O, G(0, {{2, 1}}), O, G(0, {{2, 1}})};
    const std::tuple<const char*, ZGLattice, std::vector<FinAbGroup>> cases[] = {
        {"Z", models::z4_trivial(), z}, {"M1", models::z4_m1(), m}, {"M2", models::z4_m2(), m}, {"P", models::z4_p(), p}};
    FiniteGroupResolution periodic = periodic_cyclic(models::z4(), 7);
    FiniteGroupResolution bar = bar_truncated(models::z4(), 4, 2);
    for (const auto& [name, lattice, expected] : cases) {
      auto hp = group_cohomology(periodic, lattice, 6);
      auto hb = group_cohomology(bar, lattice, 3);
      c.expect(hp == expected, std::string(name) + " periodic " + show(hp));
      c.expect(hb == std::vector<FinAbGroup>(hp.begin(), hp.begin() + 4), std::string(name) + " bar " + show(hb));
    }
  });

  criterion(4, "collapse: total complex equals E2 for k <= 4 (catalog and solver actions)", [](Check& c) {
    CollapseReport a = collapse_verify(models::y1(), 4, ActionSource::Catalog);
    c.expect(a.all_agree && a.certificate.verified, "Y1 catalog");
    CollapseReport s = collapse_verify(models::y1(), 4, ActionSource::Solver);
    c.expect(s.all_agree && s.certificate.verified, "Y1 solver");
    c.expect(s.action_source.find("solver") != std::string::npos, "solver used: " + s.action_source);
    CollapseReport b = collapse_verify(models::y2(), 4, ActionSource::Catalog);
    c.expect(b.all_agree && b.certificate.verified, "Y2 catalog");
  });

  criterion(5, "compatible-action certificates and negative control", [](Check& c) {
    for (CatalogCase k : {CatalogCase::Trivial, CatalogCase::Sign, CatalogCase::Swap, CatalogCase::Z3, CatalogCase::Z4,
                          CatalogCase::Klein, CatalogCase::D8a, CatalogCase::D8b})
      c.expect(verify(catalog_action(k)).verified, to_string(k));
    // tau(t)^k = Id, with k the order of t.
    for (CatalogCase k : {CatalogCase::Z3, CatalogCase::Z4}) {
      CompatibleAction a = catalog_action(k);
      const std::size_t t = a.group()->generator_indices()[0];
      const std::size_t order = a.group()->element_order(t);
      for (std::size_t j = 0; j <= 2; ++j) {
        LaurentMatrix acc = LaurentMatrix::identity(a.T[t][j].rows(), 2);
        RingAuto sigma = RingAuto::identity(2);
        for (std::size_t i = 0; i < order; ++i) {
          acc = acc * a.T[t][j].twisted(sigma);
          sigma = sigma.then(a.sigma[t]);
        }
        c.expect(acc.is_identity(), to_string(k) + " power in degree " + std::to_string(j));
      }
    }
    CompatibleAction bad = catalog_action(CatalogCase::Z4);
    const std::size_t t = bad.group()->generator_indices()[0];
    bad.T[t][1](1, 0) = -bad.T[t][1](1, 0);
    Certificate cert = verify(bad);
    c.expect(!cert.verified && !cert.witnesses.empty(), "mutated action rejected with a witness");
  });

  criterion(6, "Y2 values and three-way oracle consistency", [](Check& c) {
    cli::JobSpec spec;
    spec.model = "Y2";
    spec.command = cli::Command::Gerbes;
    auto doc = cli::run_command(spec);
    E2Result e2 = e2_assembly(models::y2(), 3);
    c.expect(e2.totals[2] == G(3, {{2, 8}}), "H2 = " + e2.totals[2].to_string());
    c.expect(e2.totals[3] == G(8, {{2, 19}}), "H3 = " + e2.totals[3].to_string());
    GerbeGroups g = gerbe_groups(y2());
    c.expect(g.flat.to_string() == "U(1)^3 + (Z/2)^19", "FGb = " + g.flat.to_string());
    c.expect(g.gerbes == G(8, {{2, 19}}), "Gb");
    CompatibleAction action = build_action(models::y2());
    FiniteGroupResolution p = choose_resolution(models::y2().group(), 4);
    auto total = total_complex_cohomology(action, p, 3);
    c.expect(total[2] == e2.totals[2] && total[3] == e2.totals[3], "oracle (i) total complex");
    FinAbGroup ab = abelianization(y2());
    c.expect(ab.torsion_part() == e2.totals[2].torsion_part() && ab.torsion_part() == G(0, {{2, 8}}),
             "oracle (ii) abelianization " + ab.to_string());
    std::size_t formula = 0;
    for (std::size_t j = 0; j <= 2; ++j) formula += binomial(6, j) * (3 - j);
    auto mod2 = mod_p_cohomology(action, p, 2, 2);
    c.expect(mod2[2] == 30 && formula == 30 && uct_mod_p_dimension(e2.totals[2], e2.totals[3], 2) == 30,
             "oracle (iii) F2 count " + std::to_string(mod2[2]));
    c.expect(doc.warnings.size() == 1 && doc.warnings[0].find("erratum") != std::string::npos, "erratum flagged");
  });

  criterion(7, "Y2 mod-2 dimensions for k <= 4 and fiber total 64", [](Check& c) {
    CompatibleAction action = build_action(models::y2());
    FiniteGroupResolution p = choose_resolution(models::y2().group(), 5);
    auto dims = mod_p_cohomology(action, p, 4, 2);
    E2Result e2 = e2_assembly(models::y2(), 5);
    std::ostringstream got;
    for (std::size_t k = 0; k <= 4; ++k) {
      std::size_t formula = 0;
      for (std::size_t j = 0; j <= std::min<std::size_t>(k, 6); ++j) formula += binomial(6, j) * (k - j + 1);
      c.expect(dims[k] == formula, "k = " + std::to_string(k));
      c.expect(dims[k] == uct_mod_p_dimension(e2.totals[k], e2.totals[k + 1], 2), "UCT k = " + std::to_string(k));
      got << (k ? ", " : "") << dims[k];
    }
    std::size_t fiber = 0;
    for (std::size_t j = 0; j <= 6; ++j) fiber += binomial(6, j);
    OrbifoldModel m = y2();
    FixedPointReport fp = fixed_points(m, whole_group(m.lattice.group()));
    c.expect(fiber == 64 && fp.component_count == 64, "fiber total equals fixed points");
    c.detail << " dims " << got.str();
  });

  criterion(8, "fixed points", [](Check& c) {
    OrbifoldModel m1 = y1();
    FixedPointReport a = fixed_points(m1, cli::parse_subgroup(m1, "t^2"));
    c.expect(a.component_count == 16 && a.component_dimension == 2, "Y1 <t^2>");
    OrbifoldModel m2 = y2();
    FixedPointReport b = fixed_points(m2, cli::parse_subgroup(m2, "G"));
    c.expect(b.component_count == 64 && b.component_dimension == 0, "Y2 G");
  });

  criterion(9, "Y1 order-2 subgroup classes split 6 + 4", [](Check& c) {
    ClassReport r = order_p_subgroup_classes(y1(), 2);
    c.expect(r.total == 10, "total " + std::to_string(r.total));
    c.expect(r.fingerprints.size() == 2 && r.fingerprints.count("Z^2 x Z/2") &&
                 r.fingerprints.at("Z^2 x Z/2") == 6 && r.fingerprints.count("Z^2 ⋊ Z/4") &&
                 r.fingerprints.at("Z^2 ⋊ Z/4") == 4,
             "fingerprints");
  });

  criterion(10, "Brown stable-range check in degrees 7, 8, 9", [](Check& c) {
    auto rows = brown_stable_check(y1(), {7, 8, 9});
    for (const auto& r : rows) c.expect(r.agree, "degree " + std::to_string(r.degree));
    c.expect(rows.size() == 3 && rows[0].lhs == G(0, {{2, 12}}) && rows[1].lhs == G(0, {{4, 8}, {2, 20}}) &&
                 rows[2].lhs == rows[0].lhs,
             "values");
  });

  criterion(11, "property suites", [](Check& c) {
    // SNF against the gcd of k x k minors.
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    std::uniform_int_distribution<long> entry(-9, 9);
    bool snf_ok = true;
    for (int trial = 0; trial < 500 && snf_ok; ++trial) {
      IntMatrix a(dim(rng), dim(rng));
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t s = 0; s < a.cols(); ++s) a(r, s) = entry(rng);
      SmithForm f = smith_form(a);
      snf_ok = snf_ok && f.U * a * f.V == IntMatrix::diagonal(f.d, a.rows(), a.cols());
      Integer product = 1;
      for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
        product *= f.d[k - 1];
        Integer g = 0;
        for (const auto& rows : index_subsets(a.rows(), k))
          for (const auto& cols : index_subsets(a.cols(), k)) {
            Integer d = a.submatrix(rows, cols).determinant();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
          }
        snf_ok = snf_ok && product == g;
      }
    }
    c.expect(snf_ok, "SNF minor-gcd oracle");

    // d o d = 0 for every resolution kind.
    GroupPtr z4 = models::z4(), v4 = models::y2().group();
    GroupPtr d8 = FiniteMatrixGroup::enumerate(2, {IntMatrix{{0, 1}, {-1, 0}}, IntMatrix{{0, 1}, {1, 0}}});
    for (std::size_t n = 1; n <= 6; ++n) c.expect(koszul(n).composition_vanishes(), "koszul");
    for (const auto& p : {periodic_cyclic(z4, 8), choose_resolution(v4, 8), bar_truncated(z4, 4),
                          bar_truncated(v4, 4), bar_truncated(d8, 3)})
      c.expect(p.composition_vanishes() && p.augmentation_exact(), p.kind());
    const ZGLattice y1m = models::y1();
    c.expect(total_composition_vanishes(build_action(y1m), choose_resolution(y1m.group(), 4), 3), "total Y1");

    // Resolution independence for i <= 3.
    const ZGLattice y2m = models::y2();
    FiniteGroupResolution per = periodic_cyclic(y1m.group(), 4), bz = bar_truncated(y1m.group(), 4, 20);
    FiniteGroupResolution ten = choose_resolution(y2m.group(), 4), bv = bar_truncated(y2m.group(), 4, 20);
    for (std::size_t j = 0; j <= 3; ++j) {
      ZGLattice a = exterior_power(dual(y1m), j), b = exterior_power(dual(y2m), j);
      c.expect(group_cohomology(per, a, 3) == group_cohomology(bz, a, 3), "periodic vs bar");
      c.expect(group_cohomology(ten, b, 3) == group_cohomology(bv, b, 3), "tensor vs bar");
    }

    // Character identities.
    const ZGLattice m1 = models::z4_m1(), m2 = models::z4_m2();
    const ZGLattice ls[] = {m1, m2, models::z4_p(), direct_sum({m1, m1, m2, m2})};
    for (const auto& a : ls)
      for (const auto& b : ls) {
        auto ca = trace_character(a), cb = trace_character(b);
        auto cs = trace_character(direct_sum({a, b})), ct = trace_character(tensor(a, b));
        for (std::size_t g = 0; g < ca.size(); ++g)
          c.expect(cs[g] == ca[g] + cb[g] && ct[g] == ca[g] * cb[g], "character sum/product");
      }
    for (const auto& m : ls) {
      if (m.rank() < 2) continue;
      auto ch = trace_character(m), c2 = trace_character(exterior_power(m, 2)), cd = trace_character(dual(m));
      const auto& g = *m.group();
      for (std::size_t a = 0; a < g.order(); ++a) {
        c.expect(2 * c2[a] == ch[a] * ch[a] - ch[g.multiply(a, a)], "exterior square");
        c.expect(cd[a] == ch[g.inverse(a)], "dual");
      }
    }

    // Laurent divisibility round trips.
    std::uniform_int_distribution<long> coeff(-3, 3), exp(-2, 2);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<LaurentPoly::Term> terms;
      for (int k = 0; k < 4; ++k) terms.push_back({Monomial{{exp(rng), exp(rng), exp(rng)}}, coeff(rng)});
      LaurentPoly q = LaurentPoly::from_terms(3, terms);
      const std::size_t i = trial % 3;
      Division d = divide_by_1_minus_x(q * LaurentPoly::one_minus_x(3, i), i);
      c.expect(d.exact && d.quotient == q, "division round trip");
      Division e = divide_by_1_minus_x(q, i);
      c.expect(e.exact == q.substitute_one(i).is_zero(), "substitution criterion");
    }
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}

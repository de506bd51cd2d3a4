#include "orbicoh/cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "orbicoh/cohomology.hpp"
#include "orbicoh/models.hpp"
#include "orbicoh/smith.hpp"

namespace orbicoh::cli {

using nlohmann::json;

namespace {

const std::pair<Command, const char*> kCommands[] = {
    {Command::Cohomology, "cohomology"},   {Command::Verify, "verify"},
    {Command::Gerbes, "gerbes"},           {Command::FixedPoints, "fixed-points"},
    {Command::Classes, "classes"},         {Command::Abelianization, "abelianization"},
    {Command::Compat, "compat"},           {Command::BrownCheck, "brown-check"}};

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json vector_json(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

json matrix_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

[[noreturn]] void malformed(const std::string& pointer, const std::string& what) {
  throw Error(ErrorKind::Malformed, pointer + ": " + what);
}

bool same_lattice(const ZGLattice& a, const ZGLattice& b) {
  return a.rank() == b.rank() && a.group()->elements() == b.group()->elements() && a.actions() == b.actions();
}

// Shortest word in the generators for every element, e.g. "t^2" or "s1*s2".
std::vector<std::string> element_words(const OrbifoldModel& model) {
  const auto& group = *model.lattice.group();
  const auto& gens = group.generator_indices();
  std::vector<std::vector<std::size_t>> words(group.order());
  std::vector<char> known(group.order(), 0);
  known[0] = 1;
  std::vector<std::size_t> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t g = queue[head];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const std::size_t next = group.multiply(g, gens[s]);
      if (known[next]) continue;
      known[next] = 1;
      words[next] = words[g];
      words[next].push_back(s);
      queue.push_back(next);
    }
  }
  std::vector<std::string> out;
  for (const auto& w : words) {
    if (w.empty()) {
      out.push_back("1");
      continue;
    }
    std::string text;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (!text.empty()) text += "*";
      text += model.generator_names[w[i]];
      if (j - i > 1) text += "^" + std::to_string(j - i);
      i = j;
    }
    out.push_back(text);
  }
  return out;
}

json members_json(const OrbifoldModel& model, const std::vector<std::size_t>& members) {
  const auto words = element_words(model);
  json out = json::array();
  for (std::size_t g : members) out.push_back(words[g]);
  return out;
}

std::string members_text(const OrbifoldModel& model, const std::vector<std::size_t>& members) {
  const auto words = element_words(model);
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) out += (i ? ", " : "") + words[members[i]];
  return out + "}";
}

json certificate_json(const Certificate& c) {
  json w = json::array();
  for (const auto& x : c.witnesses)
    w.push_back({{"condition", x.condition}, {"degree", x.degree}, {"g", x.g}, {"h", x.h}, {"residual", x.residual}});
  return {{"verified", c.verified},   {"identity", c.identity}, {"degree_zero", c.degree_zero},
          {"chain_map", c.chain_map}, {"cocycle", c.cocycle},   {"coefficients", c.coefficients},
          {"witnesses", w}};
}

json grid_json(const E2Page& page, std::size_t k) {
  json out = json::array();
  for (std::size_t j = 0; j <= k && j < page.cells.size(); ++j) {
    const std::size_t i = k - j;
    if (i < page.cells[j].size()) out.push_back({{"i", i}, {"j", j}, {"group", to_json(page.at(i, j))}});
  }
  return out;
}

bool periodic_friendly(const GroupPtr& g) {
  return g->order() == 1 || g->is_cyclic() || cyclic_decomposition(g).size() >= 2;
}

std::string coeff_name(long p) { return p == 0 ? "Z" : "F" + std::to_string(p); }

// The three independent checks behind the corrected Y2 values.
void attach_y2_erratum(const OrbifoldModel& model, ReportDocument& doc) {
  const auto e2 = e2_assembly(model.lattice, 3);
  CompatibleAction action = build_action(model.lattice);
  FiniteGroupResolution p = choose_resolution(model.lattice.group(), 4);
  const auto total = total_complex_cohomology(action, p, 3);
  const auto mod2 = mod_p_cohomology(action, p, 2, 2);
  const FinAbGroup ab = abelianization(model);
  const bool total_ok = total[2] == e2.totals[2] && total[3] == e2.totals[3];
  const bool ab_ok = ab.torsion_part() == e2.totals[2].torsion_part();
  const bool f2_ok = mod2[2] == uct_mod_p_dimension(e2.totals[2], e2.totals[3], 2);
  doc.result["erratum"] = {
      {"printed", {{"H2", "Z^3 + (Z/2)^6"}, {"H3", "Z^8 + (Z/2)^18"}}},
      {"computed", {{"H2", e2.totals[2].to_string()}, {"H3", e2.totals[3].to_string()}}},
      {"oracles",
       {{"total_complex", total_ok}, {"abelianization_torsion", ab.torsion_part().to_string()},
        {"abelianization_matches", ab_ok}, {"f2_dimension_h2", mod2[2]}, {"f2_matches", f2_ok}}}};
  doc.warnings.push_back(
      "erratum: the printed table for this model lists (Z/2)^6 in H^2 and (Z/2)^18 in H^3, omitting the j = 0 "
      "terms H^2(G,Z) = (Z/2)^2 and H^3(G,Z) = Z/2; computed values are confirmed by the total complex (" +
      std::string(total_ok ? "agrees" : "DISAGREES") + "), T(abelianization) = " + ab.torsion_part().to_string() +
      " and dim H^2(F_2) = " + std::to_string(mod2[2]));
}

void run_cohomology(const JobSpec& spec, const OrbifoldModel& model, ReportDocument& doc) {
  const std::size_t k = spec.max_degree.value_or(periodic_friendly(model.lattice.group()) ? 8 : 4);
  doc.input["max_degree"] = k;
  if (spec.coeff_prime == 0) {
    E2Result e2 = e2_assembly(model.lattice, k, spec.force);
    doc.result["coefficients"] = "Z";
    doc.result["resolution"] = e2.page.resolution;
    doc.result["hypothesis_holds"] = e2.page.hypothesis_holds;
    json rows = json::array();
    for (std::size_t d = 0; d <= k; ++d) {
      rows.push_back({{"degree", d}, {"e2", to_json(e2.totals[d])}, {"total", nullptr}, {"agree", nullptr},
                      {"grid", grid_json(e2.page, d)}});
      doc.lines.push_back("H^" + std::to_string(d) + " = " + e2.totals[d].to_string());
    }
    doc.result["degrees"] = rows;
    if (!e2.page.hypothesis_holds)
      doc.warnings.push_back("hypothesis unverified: assembly forced, values are E2 sums only");
    if (same_lattice(model.lattice, models::y2()) && k >= 2) attach_y2_erratum(model, doc);
    return;
  }
  const long p = spec.coeff_prime;
  CompatibleAction action = build_action(model.lattice, spec.action_source);
  FiniteGroupResolution res = choose_resolution(model.lattice.group(), k + 1);
  const auto dims = mod_p_cohomology(action, res, k, p);
  E2Result e2 = e2_assembly(model.lattice, k + 1, spec.force);
  doc.result["coefficients"] = coeff_name(p);
  doc.result["resolution"] = res.kind();
  json rows = json::array();
  for (std::size_t d = 0; d <= k; ++d) {
    const std::size_t uct = uct_mod_p_dimension(e2.totals[d], e2.totals[d + 1], p);
    rows.push_back({{"degree", d}, {"dimension", dims[d]}, {"uct", uct}, {"agree", uct == dims[d]}});
    doc.lines.push_back("dim H^" + std::to_string(d) + "(F_" + std::to_string(p) + ") = " + std::to_string(dims[d]) +
                        (uct == dims[d] ? "" : "  (universal coefficients give " + std::to_string(uct) + ")"));
  }
  doc.result["degrees"] = rows;
}

void run_verify(const JobSpec& spec, const OrbifoldModel& model, ReportDocument& doc) {
  const std::size_t k = spec.max_degree.value_or(4);
  doc.input["max_degree"] = k;
  CollapseReport r = collapse_verify(model.lattice, k, spec.action_source, spec.force);
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"degree", row.degree}, {"e2", to_json(row.e2)}, {"total", to_json(row.total)},
                    {"agree", row.agree}, {"grid", grid_json(r.page, row.degree)}});
    doc.lines.push_back("H^" + std::to_string(row.degree) + ": E2 = " + row.e2.to_string() +
                        ", total = " + row.total.to_string() + (row.agree ? "  [agree]" : "  [MISMATCH]"));
  }
  doc.result = {{"action_source", r.action_source}, {"resolution", r.resolution},
                {"certificate", certificate_json(r.certificate)}, {"degrees", rows}, {"all_agree", r.all_agree}};
  doc.lines.insert(doc.lines.begin() + 1, "action: " + r.action_source + " (certified: " +
                                          (r.certificate.verified ? "yes" : "no") + "), resolution: " + r.resolution);
  doc.lines.push_back(r.all_agree ? "collapse verified" : "collapse check FAILED");
  if (same_lattice(model.lattice, models::y2()) && k >= 2) attach_y2_erratum(model, doc);
}

void run_gerbes(const JobSpec& spec, const OrbifoldModel& model, ReportDocument& doc) {
  GerbeGroups g = gerbe_groups(model, spec.force);
  doc.result = {{"flat",
                 {{"circle_rank", g.flat.circle_rank}, {"torsion", to_json(g.flat.torsion)}, {"text", g.flat.to_string()}}},
                {"gerbes", to_json(g.gerbes)},
                {"h2", to_json(g.h2)},
                {"h3", to_json(g.h3)}};
  doc.lines.push_back("FGb = " + g.flat.to_string());
  doc.lines.push_back("Gb = " + g.gerbes.to_string());
  if (same_lattice(model.lattice, models::y2())) attach_y2_erratum(model, doc);
}

void run_fixed_points(const JobSpec& spec, const OrbifoldModel& model, ReportDocument& doc) {
  const std::string word = spec.subgroup.value_or("G");
  Subgroup q = parse_subgroup(model, word);
  FixedPointReport r = fixed_points(model, q);
  json classes = json::array();
  for (const auto& c : r.classes) {
    json values = json::array();
    for (const auto& v : c) values.push_back(vector_json(v));
    classes.push_back(values);
  }
  doc.result = {{"subgroup", {{"word", word}, {"members", members_json(model, r.subgroup)}, {"order", r.subgroup.size()}}},
                {"h1", to_json(r.h1)},
                {"component_count", integer_json(r.component_count)},
                {"component_dimension", r.component_dimension},
                {"classes", classes}};
  doc.lines.push_back("Q = " + members_text(model, r.subgroup) + " (order " + std::to_string(r.subgroup.size()) + ")");
  doc.lines.push_back("H^1(Q, M) = " + r.h1.to_string());
  doc.lines.push_back("components = " + r.component_count.get_str() + ", each a torus of dimension " +
                      std::to_string(r.component_dimension));
}

void run_classes(const JobSpec& spec, const OrbifoldModel& model, ReportDocument& doc) {
  ClassReport r = order_p_subgroup_classes(model, spec.prime);
  json subs = json::array();
  for (const auto& s : r.subgroups) {
    json orbits = json::array();
    for (const auto& o : s.orbits) {
      json classes = json::array();
      for (const auto& c : o.classes) classes.push_back(vector_json(c));
      orbits.push_back({{"size", o.classes.size()},
                        {"classes", classes},
                        {"stabilizer", members_json(model, o.stabilizer)},
                        {"stabilizer_type", o.stabilizer_name},
                        {"fixed_rank", o.fixed_rank},
                        {"acts_trivially", o.acts_trivially},
                        {"fingerprint", o.fingerprint}});
    }
    subs.push_back({{"members", members_json(model, s.subgroup)},
                    {"normalizer", members_json(model, s.normalizer)},
                    {"h1", to_json(s.h1)},
                    {"class_count", s.class_count},
                    {"orbits", orbits}});
    doc.lines.push_back("Q = " + members_text(model, s.subgroup) + ": H^1(Q, M) = " + s.h1.to_string() + ", " +
                        std::to_string(s.class_count) + " lifts, " + std::to_string(s.orbits.size()) +
                        " classes under N(Q) = " + members_text(model, s.normalizer));
  }
  json prints = json::object();
  for (const auto& [f, n] : r.fingerprints) {
    prints[f] = n;
    doc.lines.push_back("  " + std::to_string(n) + " x normalizer " + f);
  }
  doc.result = {{"prime", r.prime}, {"total", r.total}, {"fingerprints", prints}, {"subgroups", subs}};
  doc.lines.push_back("total classes of order-" + std::to_string(r.prime) + " subgroups: " + std::to_string(r.total));
}

void run_abelianization(const OrbifoldModel& model, ReportDocument& doc) {
  FinAbGroup co = coinvariants(model.lattice);
  FinAbGroup gab = group_abelianization(model.lattice.group());
  FinAbGroup ab = co + gab;
  doc.result = {{"coinvariants", to_json(co)}, {"group_abelianization", to_json(gab)}, {"abelianization", to_json(ab)}};
  doc.lines.push_back("M_G = " + co.to_string());
  doc.lines.push_back("G_ab = " + gab.to_string());
  doc.lines.push_back("Gamma_ab = " + ab.to_string());
}

void run_compat(const JobSpec& spec, const OrbifoldModel& model, ReportDocument& doc) {
  CompatibleAction action = build_action(model.lattice, spec.action_source);
  Certificate cert = verify(action);
  json gens = json::array();
  const auto& group = *action.group();
  for (std::size_t s = 0; s < group.generator_indices().size(); ++s) {
    const std::size_t g = group.generator_indices()[s];
    json degrees = json::array();
    for (std::size_t j = 0; j <= action.rank(); ++j) degrees.push_back(action.T[g][j].to_strings());
    gens.push_back({{"name", model.generator_names[s]}, {"matrix", matrix_json(group.matrix(g))}, {"T", degrees}});
    if (action.rank() <= 2)
      for (std::size_t j = 1; j <= action.rank(); ++j) {
        std::string text;
        for (const auto& row : action.T[g][j].to_strings()) {
          std::string r;
          for (const auto& e : row) r += (r.empty() ? "" : ", ") + e;
          text += (text.empty() ? "[" : ", [") + r + "]";
        }
        doc.lines.push_back("T_" + model.generator_names[s] + "[" + std::to_string(j) + "] = [" + text + "]");
      }
  }
  doc.result = {{"source", action.source}, {"certificate", certificate_json(cert)}, {"generators", gens}};
  doc.lines.insert(doc.lines.begin() + 1, "action: " + action.source);
  doc.lines.push_back(std::string("certificate: ") + (cert.verified ? "verified" : "FAILED") +
                      " (identity " + (cert.identity ? "ok" : "fail") + ", degree 0 " + (cert.degree_zero ? "ok" : "fail") +
                      ", chain map " + (cert.chain_map ? "ok" : "fail") + ", cocycle " + (cert.cocycle ? "ok" : "fail") +
                      ", coefficients " + (cert.coefficients ? "ok" : "fail") + ")");
}

void run_brown(const JobSpec& spec, const OrbifoldModel& model, ReportDocument& doc) {
  std::vector<std::size_t> degrees{7, 8, 9};
  if (spec.max_degree) {
    degrees.clear();
    for (std::size_t i = 7; i <= *spec.max_degree; ++i) degrees.push_back(i);
  }
  auto rows = brown_stable_check(model, degrees);
  json out = json::array();
  bool all = true;
  for (const auto& r : rows) {
    out.push_back({{"degree", r.degree},
                   {"lhs", to_json(r.lhs)},
                   {"trivial_part", to_json(r.trivial_part)},
                   {"twisted_part", to_json(r.twisted_part)},
                   {"rhs", to_json(r.rhs)},
                   {"agree", r.agree}});
    all = all && r.agree;
    doc.lines.push_back("H^" + std::to_string(r.degree) + " = " + r.lhs.to_string() + "; [" +
                        r.trivial_part.to_string() + "]^6 + [" + r.twisted_part.to_string() +
                        "]^4 = " + r.rhs.to_string() + (r.agree ? "  [agree]" : "  [MISMATCH]"));
  }
  doc.result = {{"rows", out}, {"all_agree", all}};
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  for (const auto& [c, n] : kCommands)
    if (name == n) return c;
  return std::nullopt;
}

std::string command_name(Command c) {
  for (const auto& [k, n] : kCommands)
    if (k == c) return n;
  return "?";
}

json to_json(const FinAbGroup& g) { return {{"free_rank", g.free_rank()}, {"torsion", vector_json(g.torsion())}}; }

OrbifoldModel parse_input(const json& doc, std::size_t bound) {
  if (!doc.is_object()) malformed("", "model must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) malformed("/n", "missing integer rank");
  const long n = doc["n"].get<long>();
  if (n < 1) malformed("/n", "rank must be positive");
  if (!doc.contains("generators") || !doc["generators"].is_array()) malformed("/generators", "missing list of matrices");
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < doc["generators"].size(); ++i) {
    const json& g = doc["generators"][i];
    const std::string ptr = "/generators/" + std::to_string(i);
    if (!g.is_array() || g.size() != static_cast<std::size_t>(n)) malformed(ptr, "expected " + std::to_string(n) + " rows");
    IntMatrix m(n, n);
    for (std::size_t r = 0; r < g.size(); ++r) {
      if (!g[r].is_array() || g[r].size() != static_cast<std::size_t>(n))
        malformed(ptr + "/" + std::to_string(r), "expected " + std::to_string(n) + " entries");
      for (std::size_t c = 0; c < g[r].size(); ++c) {
        if (!g[r][c].is_number_integer()) malformed(ptr + "/" + std::to_string(r) + "/" + std::to_string(c), "not an integer");
        m(r, c) = g[r][c].get<long>();
      }
    }
    gens.push_back(std::move(m));
  }
  std::vector<std::string> names;
  if (doc.contains("generator_names")) {
    const json& nm = doc["generator_names"];
    if (!nm.is_array() || nm.size() != gens.size()) malformed("/generator_names", "need one name per generator");
    for (std::size_t i = 0; i < nm.size(); ++i) {
      if (!nm[i].is_string() || nm[i].get<std::string>().empty())
        malformed("/generator_names/" + std::to_string(i), "not a name");
      names.push_back(nm[i].get<std::string>());
    }
  }
  std::string name = "model";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) malformed("/name", "not a string");
    name = doc["name"].get<std::string>();
  }
  GroupPtr group = FiniteMatrixGroup::enumerate(static_cast<std::size_t>(n), gens, bound);
  ZGLattice lattice = ZGLattice::defining(group);
  if (doc.contains("blocks")) {
    // A hint: a partition of 1..n for which every element is block diagonal.
    const json& b = doc["blocks"];
    if (!b.is_array()) malformed("/blocks", "expected a list of coordinate lists");
    std::vector<long> owner(n, -1);
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (!b[k].is_array()) malformed("/blocks/" + std::to_string(k), "expected a coordinate list");
      for (const auto& c : b[k]) {
        if (!c.is_number_integer() || c.get<long>() < 1 || c.get<long>() > n || owner[c.get<long>() - 1] != -1)
          malformed("/blocks/" + std::to_string(k), "coordinates must be distinct values in 1..n");
        owner[c.get<long>() - 1] = static_cast<long>(k);
      }
    }
    if (std::count(owner.begin(), owner.end(), -1) != 0) malformed("/blocks", "blocks must cover 1..n");
    for (const auto& m : group->elements())
      for (long r = 0; r < n; ++r)
        for (long c = 0; c < n; ++c)
          if (owner[r] != owner[c] && sgn(m(r, c)) != 0) malformed("/blocks", "action is not block diagonal");
  }
  return make_model(std::move(name), std::move(lattice), std::move(names));
}

OrbifoldModel load_model(const std::string& source, std::size_t bound) {
  if (source == "Y1") return make_model("Y1", models::y1(), {"t"});
  if (source == "Y2") return make_model("Y2", models::y2(), {"s1", "s2"});
  std::ifstream in(source);
  if (!in) throw Error(ErrorKind::Malformed, "cannot read model file '" + source + "'");
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded()) throw Error(ErrorKind::Malformed, "'" + source + "' is not valid JSON");
  return parse_input(doc, bound);
}

json model_to_json(const OrbifoldModel& model) {
  json gens = json::array();
  for (const auto& g : model.lattice.group()->generators()) gens.push_back(matrix_json(g));
  return {{"name", model.name}, {"n", model.lattice.rank()}, {"generators", gens},
          {"generator_names", model.generator_names}};
}

Subgroup parse_subgroup(const OrbifoldModel& model, const std::string& words) {
  const GroupPtr& group = model.lattice.group();
  if (words == "G") return whole_group(group);
  std::vector<std::size_t> elements;
  std::stringstream list(words);
  std::string word;
  while (std::getline(list, word, ',')) {
    std::size_t g = FiniteMatrixGroup::identity();
    std::stringstream factors(word);
    std::string factor;
    while (std::getline(factors, factor, '*')) {
      factor.erase(0, factor.find_first_not_of(' '));
      factor.erase(factor.find_last_not_of(' ') + 1);
      if (factor.empty() || factor == "1") continue;
      std::string base = factor;
      long power = 1;
      if (auto caret = factor.find('^'); caret != std::string::npos) {
        base = factor.substr(0, caret);
        try {
          std::size_t used = 0;
          power = std::stol(factor.substr(caret + 1), &used);
          if (used != factor.size() - caret - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
          throw Error(ErrorKind::Malformed, "bad exponent in '" + factor + "'");
        }
      }
      auto it = std::find(model.generator_names.begin(), model.generator_names.end(), base);
      if (it == model.generator_names.end()) throw Error(ErrorKind::Malformed, "unknown generator '" + base + "'");
      const std::size_t gen = group->generator_indices()[static_cast<std::size_t>(it - model.generator_names.begin())];
      g = group->multiply(g, group->power(gen, power));
    }
    elements.push_back(g);
  }
  return subgroup_generated(group, elements);
}

ReportDocument run_command(const JobSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  if (spec.coeff_prime != 0 && !is_prime(spec.coeff_prime))
    throw Error(ErrorKind::NotPrime, std::to_string(spec.coeff_prime) + " is not prime");
  OrbifoldModel model = load_model(spec.model, spec.group_bound);
  ReportDocument doc;
  doc.input = {{"command", command_name(spec.command)}, {"model", model_to_json(model)},
               {"coefficients", coeff_name(spec.coeff_prime)}, {"force", spec.force}};
  if (spec.max_degree) doc.input["max_degree"] = *spec.max_degree;
  if (spec.subgroup) doc.input["subgroup"] = *spec.subgroup;
  doc.lines.push_back("model " + model.name + ": rank " + std::to_string(model.lattice.rank()) + ", G = " +
                      model.lattice.group()->structure_name() + " of order " +
                      std::to_string(model.lattice.group()->order()));
  switch (spec.command) {
    case Command::Cohomology: run_cohomology(spec, model, doc); break;
    case Command::Verify: run_verify(spec, model, doc); break;
    case Command::Gerbes: run_gerbes(spec, model, doc); break;
    case Command::FixedPoints: run_fixed_points(spec, model, doc); break;
    case Command::Classes:
      doc.input["prime"] = spec.prime;
      run_classes(spec, model, doc);
      break;
    case Command::Abelianization: run_abelianization(model, doc); break;
    case Command::Compat: run_compat(spec, model, doc); break;
    case Command::BrownCheck: run_brown(spec, model, doc); break;
  }
  doc.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return doc;
}

std::string emit_report(const ReportDocument& doc, Format format) {
  if (format == Format::Json) {
    json out = {{"input", doc.input},
                {"result", doc.result},
                {"warnings", doc.warnings},
                {"timing", {{"elapsed_ms", doc.elapsed_ms}}}};
    return out.dump(2) + "\n";
  }
  std::string out;
  for (const auto& l : doc.lines) out += l + "\n";
  for (const auto& w : doc.warnings) out += "warning: " + w + "\n";
  return out;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Malformed:
    case ErrorKind::NotUnimodular:
    case ErrorKind::BoundExceeded:
    case ErrorKind::NotPrime:
    case ErrorKind::UnsupportedModel:
    case ErrorKind::OutOfRange:
      return 2;
    default:
      return 1;
  }
}

}  // namespace orbicoh::cli

#include "quiverq/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "quiverq/errors.hpp"
#include "quiverq/fourier.hpp"
#include "quiverq/hopf.hpp"
#include "quiverq/ideal.hpp"
#include "quiverq/quotient.hpp"
#include "quiverq/reptype.hpp"

namespace quiverq {

using json = nlohmann::ordered_json;

namespace {

class ConfigError : public Error {
 public:
  using Error::Error;
};

struct Report {
  json results = json::array();
  json checks = json::array();

  void check(std::string name, std::string claim, bool passed, json detail = nullptr) {
    json c;
    c["name"] = std::move(name);
    c["claim"] = std::move(claim);
    c["passed"] = passed;
    c["detail"] = std::move(detail);
    checks.push_back(std::move(c));
  }
  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const json& c) { return c["passed"].get<bool>(); });
  }
};

json config_json(const RunConfig& c) {
  json j;
  j["command"] = c.command;
  j["type"] = c.type.empty() ? json(nullptr) : json(c.type);
  j["matrix_file"] = c.matrix_file.empty() ? json(nullptr) : json(c.matrix_file);
  j["n"] = c.n;
  j["backend"] = c.backend;
  j["prime_floor"] = c.prime_floor;
  j["max_degree"] = c.max_degree == 0 ? json("auto") : json(c.max_degree);
  j["vertex_budget"] = c.vertex_budget;
  j["suites"] = c.suites;
  j["execution"] = c.serial ? "serial" : "parallel";
  j["root_vector_powers"] = c.root_vector_powers;
  return j;
}

json backend_json(const CyclotomicField& f) {
  json j;
  j["kind"] = "exact";
  j["field"] = "Q(zeta_" + std::to_string(f.order()) + ")";
  j["modulus"] = f.modulus();
  return j;
}

json backend_json(const PrimeField& f) {
  json j;
  j["kind"] = "modular";
  j["prime"] = f.prime();
  j["root"] = f.root();
  j["note"] = "dimensions over F_p equal those over Q(zeta_n) modulo a specialization assumption";
  return j;
}

template <ScalarField F>
json instance_json(const CartanMatrix& c, int n, const F& f) {
  json j;
  j["cartan"] = c.name().empty() ? json(nullptr) : json(c.name());
  j["matrix"] = c.rows();
  j["t"] = c.rank();
  j["n"] = n;
  j["e"] = nilpotency_order(n);
  const auto v = validate(c);
  j["positive_definite"] = v.positive_definite;
  if (v.ade()) {
    const auto rs = root_system(c);
    j["positive_roots"] = rs.count();
    j["snf"] = rs.snf_diagonal;
    j["coker_cardinality"] = coker_cardinality(c, n);
  }
  j["backend"] = backend_json(f);
  return j;
}

QuotientOptions quotient_options(const RunConfig& cfg, const CartanMatrix& c, int n) {
  QuotientOptions o;
  o.max_degree = cfg.max_degree ? cfg.max_degree : static_cast<std::size_t>(pbw_top_degree(c, n)) + 1;
  o.execution = cfg.serial ? Execution::serial : Execution::parallel;
  return o;
}

template <ScalarField F>
json dimension_json(const GradedQuotient<F>& gq) {
  json j;
  j["graded"] = gq.graded_dimensions();
  j["total"] = gq.total_dimension();
  j["top_degree_built"] = gq.top_degree();
  j["nilpotency_degree"] = gq.nilpotency_degree() ? json(*gq.nilpotency_degree()) : json(nullptr);
  j["truncated"] = gq.truncated();
  return j;
}

// ------------------------------------------------------------ commands

template <ScalarField F>
void cmd_quiver(const RunConfig& cfg, const CartanMatrix& c, const F&, Report& rep) {
  CayleyQuiver cq(c, cfg.n, cfg.vertex_budget);
  const Quiver& q = cq.quiver();
  std::size_t min_in = q.num_arrows(), max_in = 0, min_out = q.num_arrows(), max_out = 0;
  bool sources_ok = true;
  for (VertexId v = 0; v < q.num_vertices(); ++v) {
    min_in = std::min(min_in, q.arrows_into(v).size());
    max_in = std::max(max_in, q.arrows_into(v).size());
    min_out = std::min(min_out, q.arrows_from(v).size());
    max_out = std::max(max_out, q.arrows_from(v).size());
    for (int i = 0; i < cq.rank(); ++i) {
      const ArrowId a = cq.arrow(v, i);
      if (q.target(a) != v || cq.add(q.source(a), cq.column_element(i)) != v) sources_ok = false;
    }
  }
  const auto comps = connected_components(q);
  const long long coker = coker_cardinality(c, cfg.n);
  json r;
  r["name"] = "quiver";
  r["vertices"] = q.num_vertices();
  r["arrows"] = q.num_arrows();
  r["components"] = comps.count;
  r["in_degree"] = {min_in, max_in};
  r["out_degree"] = {min_out, max_out};
  r["loops"] = q.has_loops();
  rep.results.push_back(r);

  const auto sep = separated_quiver_evidence(cq);
  json s;
  s["name"] = "separated_quiver";
  s["vertices"] = sep.vertices;
  s["arrows"] = sep.arrows;
  s["min_level0_out_degree"] = sep.min_level0_out_degree;
  s["dynkin_components"] = sep.dynkin;
  s["euclidean_components"] = sep.euclidean;
  s["wild_components"] = sep.wild;
  s["component_types"] = sep.component_names;
  rep.results.push_back(s);

  const std::size_t t = static_cast<std::size_t>(cq.rank());
  rep.check("vertex_and_arrow_counts", "|Q_0| = n^t and |Q_1| = t n^t",
            q.num_arrows() == t * q.num_vertices());
  rep.check("degrees", "every vertex has t arrows in and t arrows out",
            min_in == t && max_in == t && min_out == t && max_out == t);
  rep.check("arrow_sources", "A(K^c, i) starts at K^{c - a_i}", sources_ok);
  rep.check("components_equal_coker", "connected components = |coker C| on (Z/nZ)^t",
            static_cast<long long>(comps.count) == coker, {{"components", comps.count}, {"coker", coker}});
  if (!cfg.emit_graph.empty()) {
    std::ofstream os(cfg.emit_graph);
    if (!os) throw ConfigError("cannot write graph file " + cfg.emit_graph);
    os << to_dot(q, "cayley_quiver");
  }
}

template <ScalarField F>
void cmd_dim(const RunConfig& cfg, const CartanMatrix& c, const F& f, Report& rep, bool per_degree) {
  CayleyQuiver cq(c, cfg.n, cfg.vertex_budget);
  const auto gens = ideal_generators(cq, f);
  auto relations = elements(gens);
  std::size_t extra = 0;
  if (cfg.root_vector_powers) {
    for (auto& x : root_vector_power_elements(cq, f)) {
      relations.push_back(std::move(x));
      ++extra;
    }
  }
  GradedQuotient<F> gq(cq.quiver(), f, relations, quotient_options(cfg, c, cfg.n));
  const auto pbw = pbw_graded_dimensions(c, cfg.n);
  const long long pbw_total = pbw_total_dimension(c, cfg.n);
  json r;
  r["name"] = "dimension";
  r.update(dimension_json(gq));
  r["generators"] = gens.size();
  r["root_vector_powers"] = extra;
  r["pbw_graded"] = pbw;
  r["pbw_total"] = pbw_total;
  rep.results.push_back(r);
  if (per_degree) {
    json rows = json::array();
    for (std::size_t d = 0; d <= gq.top_degree(); ++d) {
      json row;
      row["degree"] = d;
      row["dimension"] = gq.dimension(d);
      row["pbw"] = d < pbw.size() ? pbw[d] : 0;
      row["blocks"] = gq.degree(d).blocks.size();
      row["relation_rank"] = gq.degree(d).relation_rank;
      rows.push_back(row);
    }
    rep.results.push_back({{"name", "graded_table"}, {"rows", rows}});
  }
  std::vector<long long> got;
  for (auto d : gq.graded_dimensions()) got.push_back(static_cast<long long>(d));
  std::optional<std::size_t> first_mismatch;
  for (std::size_t d = 0; d < std::max(got.size(), pbw.size()); ++d) {
    const long long a = d < got.size() ? got[d] : 0, b = d < pbw.size() ? pbw[d] : 0;
    if (a != b) {
      first_mismatch = d;
      break;
    }
  }
  rep.check("nilpotent", "the image of the arrow ideal is nilpotent in k^Q / J", !gq.truncated(),
            {{"degree_cap", gq.options().max_degree}});
  rep.check("total_dimension_pbw", "dim k^Q / J = n^t e^N (PBW)",
            !gq.truncated() && static_cast<long long>(gq.total_dimension()) == pbw_total,
            {{"computed", gq.total_dimension()}, {"pbw", pbw_total}});
  rep.check("graded_dimensions_pbw", "graded dimensions = n^t prod_beta (1 + x^ht + ... + x^{(e-1) ht})",
            !first_mismatch.has_value(),
            first_mismatch ? json{{"first_mismatch_degree", *first_mismatch}} : json(nullptr));
}

template <ScalarField F>
void cmd_blocks(const RunConfig& cfg, const CartanMatrix& c, const F&, Report& rep) {
  CayleyQuiver cq(c, cfg.n, cfg.vertex_budget);
  const auto comps = connected_components(cq.quiver());
  std::vector<std::size_t> sizes(comps.count, 0);
  for (auto l : comps.label) ++sizes[l];
  json blocks = json::array();
  for (std::size_t b = 0; b < comps.count; ++b) {
    VertexId first = 0;
    while (comps.label[first] != b) ++first;
    blocks.push_back({{"block", b}, {"vertices", sizes[b]}, {"contains", cq.quiver().vertex_name(first)}});
  }
  const long long coker = coker_cardinality(c, cfg.n);
  rep.results.push_back({{"name", "blocks"}, {"count", comps.count}, {"coker", coker}, {"blocks", blocks}});
  rep.check("blocks_equal_coker", "number of blocks = |coker C|", static_cast<long long>(comps.count) == coker);
  rep.check("connected_iff_det_invertible", "connected iff det C is invertible mod n",
            (comps.count == 1) == (std::gcd(determinant(c), static_cast<long long>(cfg.n)) == 1));
}

template <ScalarField F>
void cmd_ext(const RunConfig& cfg, const CartanMatrix& c, const F& f, Report& rep) {
  CayleyQuiver cq(c, cfg.n, cfg.vertex_budget);
  QuotientOptions o = quotient_options(cfg, c, cfg.n);
  o.max_degree = 1;
  GradedQuotient<F> gq(cq.quiver(), f, elements(ideal_generators(cq, f)), o);
  const Quiver& q = cq.quiver();
  json rows = json::array();
  std::size_t mismatches = 0, nonzero = 0;
  for (VertexId u = 0; u < q.num_vertices(); ++u) {
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
      const std::size_t dim = radical_layer_dimension(gq, u, v);
      std::size_t arrows = 0;
      for (ArrowId a : q.arrows_from(u)) arrows += q.target(a) == v ? 1 : 0;
      bool column = false;
      for (int i = 0; i < cq.rank(); ++i) column = column || cq.subtract(v, u) == cq.column_element(i);
      if (dim != arrows || (dim == 1) != column) ++mismatches;
      if (dim) {
        ++nonzero;
        rows.push_back({{"source", q.vertex_name(u)}, {"target", q.vertex_name(v)}, {"dimension", dim}});
      }
    }
  }
  rep.results.push_back({{"name", "ext1"}, {"nonzero_pairs", nonzero}, {"rows", rows}});
  rep.check("ext1_equals_arrow_count", "dim Ext^1(S_u, S_v) = number of arrows u -> v = 1 iff v - u is a column of C",
            mismatches == 0, {{"pairs_checked", q.num_vertices() * q.num_vertices()}, {"mismatches", mismatches}});
}

json witness_json(const WitnessChain& chain) {
  json steps = json::array();
  for (const auto& s : chain.steps) {
    steps.push_back({{"presentation", s.name},
                     {"relations", s.relations},
                     {"graded", s.graded},
                     {"dimension", s.dimension},
                     {"expected", s.expected},
                     {"quotient_of_predecessor", s.quotient_of_predecessor},
                     {"substitution", s.substitution}});
  }
  return steps;
}

json complement_json(const ComplementReport& c) {
  return {{"total", c.total},
          {"subalgebra", c.subalgebra},
          {"complement", c.complement},
          {"combined_rank", c.combined_rank},
          {"subalgebra_graded", c.subalgebra_graded},
          {"complement_graded", c.complement_graded},
          {"left_stable", c.left_stable},
          {"right_stable", c.right_stable}};
}

template <ScalarField F>
void cmd_witness(const RunConfig&, const CartanMatrix& c, const F& f, Report& rep) {
  if (c.rank() < 2) throw ConfigError("witness presentations need t >= 2");
  const auto chain = build_witness_chain(c, f);
  rep.results.push_back({{"name", "witness_chain"}, {"steps", witness_json(chain)}});
  for (const auto& s : chain.steps) {
    rep.check("witness_" + s.name, "presentation dimension and quotient map verified", s.ok(),
              {{"dimension", s.dimension}, {"expected", s.expected}});
  }
}

template <ScalarField F>
void cmd_classify(const RunConfig& cfg, const CartanMatrix& c, const F& f, Report& rep) {
  ClassifyOptions opts;
  opts.vertex_budget = cfg.vertex_budget;
  opts.execution = cfg.serial ? Execution::serial : Execution::parallel;
  const auto cl = classify(c, cfg.n, f, opts);
  json r;
  r["name"] = "classification";
  r["verdict"] = to_string(cl.verdict);
  r["route"] = cl.route;
  r["blocks"] = cl.blocks;
  if (cl.separated) {
    r["separated_quiver"] = {{"vertices", cl.separated->vertices},
                             {"arrows", cl.separated->arrows},
                             {"min_level0_out_degree", cl.separated->min_level0_out_degree},
                             {"dynkin_components", cl.separated->dynkin},
                             {"euclidean_components", cl.separated->euclidean},
                             {"wild_components", cl.separated->wild},
                             {"component_types", cl.separated->component_names}};
  }
  if (cl.witnesses) r["witnesses"] = witness_json(*cl.witnesses);
  if (cl.complement) r["complement"] = complement_json(*cl.complement);
  r["notes"] = cl.notes;
  rep.results.push_back(r);
  if (cl.t == 1 && cfg.n >= 5)
    rep.check("finite_for_sl2", "finite representation type for t = 1", cl.verdict == Verdict::Finite);
  if (cl.t >= 3 && cfg.n >= 5)
    rep.check("separated_quiver_wild", "separated quiver has >= 3 arrows leaving each level-0 vertex and is wild",
              cl.verdict == Verdict::Wild);
  if (cl.t == 2 && cfg.n >= 5) {
    rep.check("witness_chain", "quasipolynomial, cubic pair and Ringel (c) presentations verified",
              cl.witnesses && cl.witnesses->ok());
    if (cl.complement)
      rep.check("complement", "u++ has a sub-bimodule complement in u+", cl.complement->ok());
  }
}

// ------------------------------------------------------------ verify suites

template <ScalarField F>
void suite_hopf(const CayleyQuiver& cq, const F& f, Report& rep) {
  const PathAlgebra<F> alg(cq.quiver(), f);
  Coproduct<F> delta(cq, f);
  std::size_t coassoc_fail = 0, counit_fail = 0, checked = 0;
  std::string witness;
  auto run_one = [&](const AlgebraElement<F>& a) {
    ++checked;
    auto r = delta.check_coassociativity(a);
    if (!r.ok) {
      ++coassoc_fail;
      if (witness.empty()) witness = r.witness;
    }
    if (!delta.check_counit(a).ok) ++counit_fail;
  };
  for (VertexId v = 0; v < cq.group_order(); ++v) run_one(alg.vertex(v));
  for (ArrowId a = 0; a < cq.quiver().num_arrows(); ++a) run_one(alg.arrow(a));
  rep.check("coassociativity", "Delta is coassociative on vertex and arrow masses", coassoc_fail == 0,
            {{"elements", checked}, {"failures", coassoc_fail}, {"witness", witness}});
  rep.check("counit", "(eps x id) Delta = id = (id x eps) Delta", counit_fail == 0,
            {{"elements", checked}, {"failures", counit_fail}});

  bool counit_values = f.equal(delta.counit(alg.vertex(cq.identity())), f.one());
  for (VertexId v = 1; v < cq.group_order(); ++v) counit_values = counit_values && f.is_zero(delta.counit(alg.vertex(v)));
  for (ArrowId a = 0; a < cq.quiver().num_arrows(); ++a) counit_values = counit_values && f.is_zero(delta.counit(alg.arrow(a)));
  rep.check("counit_values", "eps(d_0) = 1, eps(d_c) = 0 for c != 0, eps(arrow) = 0", counit_values);

  bool morphism = true;
  for (ArrowId a = 0; a < cq.quiver().num_arrows(); ++a) {
    for (ArrowId b : cq.quiver().arrows_into(cq.quiver().source(a))) {
      const auto prod = alg.multiply(alg.arrow(a), alg.arrow(b));
      const auto lhs = delta(prod);
      const auto rhs = Coproduct<F>::tensor_multiply(f, delta(alg.arrow(a)), delta(alg.arrow(b)));
      morphism = morphism && equal(f, lhs, rhs);
    }
  }
  rep.check("coproduct_multiplicative", "Delta(uv) = Delta(u) Delta(v) on composable arrow pairs", morphism);

  Coproduct<F> bad(cq, f, CoproductVariant::non_character);
  std::size_t detected = 0;
  for (ArrowId a = 0; a < cq.quiver().num_arrows(); ++a) detected += bad.check_coassociativity(alg.arrow(a)).ok ? 0 : 1;
  rep.check("coassociativity_negative_control", "a non-character coefficient q^{x_i^2} breaks coassociativity",
            cq.n() <= 2 || detected > 0, {{"arrows_detected", detected}});
}

template <ScalarField F>
void suite_ideal(const RunConfig& cfg, const CayleyQuiver& cq, const F& f, Report& rep) {
  const auto gens = ideal_generators(cq, f);
  QuotientOptions o = quotient_options(cfg, cq.cartan(), cq.n());
  o.max_degree = std::min(o.max_degree, static_cast<std::size_t>(nilpotency_order(cq.n())) + 1);
  GradedQuotient<F> gq(cq.quiver(), f, elements(gens), o);
  const PathAlgebra<F> alg(cq.quiver(), f);

  bool members = true;
  for (const auto& g : gens) {
    if (!gq.reduces_to_zero(g.element)) members = false;
    for (ArrowId a : cq.quiver().arrows_into(g.target))
      if (!gq.reduces_to_zero(alg.multiply(alg.arrow(a), g.element))) members = false;
  }
  rep.check("ideal_membership", "generators and their arrow multiples reduce to zero", members);

  std::map<RelationFamily, std::pair<std::size_t, std::size_t>> per_family;  // (checked, failures)
  Coproduct<F> delta(cq, f);
  Coproduct<F> dropped(cq, f, CoproductVariant::drop_q_factor);
  std::map<Path, typename GradedQuotient<F>::Coordinates> cache;
  std::size_t dropped_detected = 0;
  for (const auto& g : gens) {
    auto& [count, fail] = per_family[g.family];
    ++count;
    if (!vanishes_in_quotient_square(gq, delta(g.element), cache)) ++fail;
    if (!vanishes_in_quotient_square(gq, dropped(g.element), cache)) ++dropped_detected;
  }
  json fam = json::object();
  bool all = true;
  for (const auto& [family, cf] : per_family) {
    fam[to_string(family)] = {{"generators", cf.first}, {"failures", cf.second}};
    all = all && cf.second == 0;
  }
  rep.check("delta_preserves_ideal", "Delta(g) = 0 in (k^Q/J) x (k^Q/J) for every generator of J", all, fam);
  rep.check("ideal_negative_control", "dropping q^{x_i} from Delta breaks ideal preservation",
            cq.n() <= 2 || dropped_detected > 0, {{"generators_detected", dropped_detected}});
}

template <ScalarField F>
void suite_fourier(const CayleyQuiver& cq, const F& f, Report& rep) {
  const Fourier<F> fo(cq, f);
  const auto& alg = fo.algebra();
  const auto& q = cq.quiver();
  const int t = cq.rank();

  std::size_t fails = 0, checked = 0;
  for (VertexId c = 0; c < cq.group_order(); ++c) {
    ++checked;
    if (!alg.equal(fo.psi(fo.chi_q(Path::vertex(c))), alg.vertex(c))) ++fails;
  }
  for (ArrowId a = 0; a < q.num_arrows(); ++a) {
    ++checked;
    if (!alg.equal(fo.psi(fo.chi_q(Path::arrow(q, a))), alg.arrow(a))) ++fails;
  }
  rep.check("psi_after_chi_q", "Psi(chi_q(b)) = b on vertex and arrow masses", fails == 0,
            {{"elements", checked}, {"failures", fails}});

  bool gens_ok = true;
  for (int i = 0; i < t; ++i) {
    std::vector<int> m(static_cast<std::size_t>(t), 0);
    m[static_cast<std::size_t>(i)] = 1;
    gens_ok = gens_ok && fo.equal(fo.chi_q(fo.psi_k(i)), fo.k_element(cq.vertex(m)));
    gens_ok = gens_ok && fo.equal(fo.chi_q(fo.psi_e(i)), fo.e_word({i}));
  }
  rep.check("chi_q_after_psi", "chi_q(Psi(g)) = g for g in {K_i, E_i}", gens_ok);

  bool compat = true;
  for (ArrowId a = 0; a < q.num_arrows(); ++a) compat = compat && fo.bimodule_compatible(a);
  rep.check("bimodule_compatibility", "chi(d_c) chi_q(A(c,i)) chi(d_{c-a_i}) = chi_q(A(c,i))", compat);

  bool mult = true;
  for (VertexId c = 0; c < cq.group_order(); ++c)
    for (VertexId d = 0; d < cq.group_order(); ++d) {
      const auto prod = fo.multiply(fo.chi(c), fo.chi(d));
      mult = mult && (c == d ? fo.equal(prod, fo.chi(c)) : prod.empty());
    }
  rep.check("chi_multiplicative", "chi(d_c d_d) = chi(d_c) chi(d_d)", mult);

  bool sum_one = fo.equal(fo.chi(alg.unit()), fo.one());
  rep.check("chi_unit", "chi(sum_c d_c) = 1", sum_one);

  bool type_one = true;
  for (int i = 0; i < t; ++i) {
    std::vector<int> inv(static_cast<std::size_t>(t), 0);
    inv[static_cast<std::size_t>(i)] = cq.n() - 1;
    const auto kinv = fo.chi_inverse(cq.vertex(inv));
    type_one = type_one && alg.equal(alg.power(fo.psi_k(i), cq.n()), alg.unit());
    for (int j = 0; j < t; ++j) {
      const auto lhs = alg.multiply(alg.multiply(fo.psi_k(i), fo.psi_e(j)), kinv);
      type_one = type_one && alg.equal(lhs, alg.scale(fo.psi_e(j), f.q_power(cq.cartan()(i, j))));
    }
  }
  rep.check("psi_type_one", "Psi(K_i) Psi(E_j) Psi(K_i)^-1 = q^{a_ij} Psi(E_j) and Psi(K_i)^n = 1", type_one);

  // Type-II transport: Psi(relation) equals the sum over targets of the
  // matching generator family.
  const auto gens = ideal_generators(cq, f);
  std::map<std::tuple<RelationFamily, int, int>, AlgebraElement<F>> families;
  for (const auto& g : gens) alg.add_to(families[{g.family, g.i, g.j}], g.element, f.one());
  std::size_t transported = 0, transport_fail = 0;
  for (const auto& [key, sum] : families) {
    const auto& [family, i, j] = key;
    const auto rel = type_two_relation(fo, f, family, i, j, nilpotency_order(cq.n()));
    ++transported;
    if (!alg.equal(fo.psi(rel), sum)) ++transport_fail;
  }
  rep.check("type_two_transport", "Psi maps each type-II relation onto the sum of its generator family",
            transport_fail == 0, {{"relations", transported}, {"failures", transport_fail}});
}

template <ScalarField F>
void suite_crossed(const CayleyQuiver& cq, const F& f, Report& rep) {
  CrossedProduct<F> cp(cq, f);
  const auto mixed = cp.check_mixed_square();
  rep.check("mixed_square_relation",
            "q^{a_ij} (K^c, A(K^d,j)) (A(K^c,i), K^{d-a_j}) = (A(K^c,i), K^d) (K^{c-a_i}, A(K^d,j))", mixed.ok,
            mixed.ok ? json(nullptr) : json(mixed.witness));

  const auto pairs = low_degree_pairs<F>(cq);
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
  auto basis = [&](std::size_t k) { return cp.basis(pairs[k].first, pairs[k].second); };

  bool assoc = true;
  for (int s = 0; s < 500; ++s) {
    const auto a = basis(pick(rng)), b = basis(pick(rng)), c = basis(pick(rng));
    assoc = assoc && equal(f, cp.multiply(cp.multiply(a, b), c), cp.multiply(a, cp.multiply(b, c)));
  }
  // Triples that actually compose.
  std::map<std::pair<VertexId, VertexId>, std::vector<std::size_t>> by_targets;
  for (std::size_t k = 0; k < pairs.size(); ++k) by_targets[{pairs[k].first.target, pairs[k].second.target}].push_back(k);
  auto composable_after = [&](std::size_t k) -> const std::vector<std::size_t>& {
    static const std::vector<std::size_t> none;
    auto it = by_targets.find({pairs[k].first.source, pairs[k].second.source});
    return it == by_targets.end() ? none : it->second;
  };
  std::size_t composable_triples = 0;
  for (int s = 0; s < 500; ++s) {
    const std::size_t a = pick(rng);
    const auto& nb = composable_after(a);
    if (nb.empty()) continue;
    const std::size_t b = nb[rng() % nb.size()];
    const auto& nc = composable_after(b);
    if (nc.empty()) continue;
    const std::size_t c = nc[rng() % nc.size()];
    ++composable_triples;
    assoc = assoc && equal(f, cp.multiply(cp.multiply(basis(a), basis(b)), basis(c)),
                           cp.multiply(basis(a), cp.multiply(basis(b), basis(c))));
  }
  rep.check("crossed_associative", "crossed product is associative on degree <= 1 triples", assoc,
            {{"random_triples", 500}, {"composable_triples", composable_triples}});

  std::size_t mult_checked = 0, mult_fail = 0;
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b : composable_after(a)) {
      ++mult_checked;
      const auto x = basis(a), y = basis(b);
      if (!equal(f, cp.phi(cp.multiply(x, y)), cp.multiply(cp.phi(x), cp.phi(y)))) ++mult_fail;
    }
  }
  for (int s = 0; s < 2000; ++s) {
    const auto x = basis(pick(rng)), y = basis(pick(rng));
    ++mult_checked;
    if (!equal(f, cp.phi(cp.multiply(x, y)), cp.multiply(cp.phi(x), cp.phi(y)))) ++mult_fail;
  }
  rep.check("phi_multiplicative", "phi(xy) = phi(x) phi(y) on degree <= 1 basis pairs", mult_fail == 0,
            {{"products", mult_checked}, {"failures", mult_fail}});

  std::size_t involution_fail = 0;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto x = basis(k);
    if (!equal(f, cp.phi(cp.phi(x)), x)) ++involution_fail;
  }
  rep.check("phi_involution", "phi^2 = id on degree <= 1", involution_fail == 0,
            {{"pairs", pairs.size()}, {"failures", involution_fail}});

  const Fourier<F> fo(cq, f);
  Coproduct<F> delta(cq, f);
  json per_gen = json::array();
  bool all_op = true;
  for (int i = 0; i < cq.rank(); ++i) {
    for (int kind = 0; kind < 2; ++kind) {
      const auto g = kind == 0 ? fo.psi_k(i) : fo.psi_e(i);
      const auto d = delta(g);
      const auto pd = cp.phi(d);
      const bool op = equal(f, pd, opposite<F>(d));
      const bool same = equal(f, pd, d);
      all_op = all_op && op;
      per_gen.push_back({{"generator", std::string(kind == 0 ? "K" : "E") + std::to_string(i + 1)},
                         {"phi_delta_equals_delta_op", op},
                         {"phi_delta_equals_delta", same}});
    }
  }
  rep.check("phi_delta_is_delta_op", "phi Delta = Delta^op on Psi(K_i) and Psi(E_i)", all_op, per_gen);
}

template <ScalarField F>
void suite_complement(const RunConfig& cfg, const CayleyQuiver& cq, const F& f, Report& rep) {
  if (cq.rank() > 2 || cq.n() > 6) throw ConfigError("complement suite needs t <= 2 and n <= 6");
  GradedQuotient<F> gq(cq.quiver(), f, elements(ideal_generators(cq, f)), quotient_options(cfg, cq.cartan(), cq.n()));
  if (gq.truncated()) {
    rep.check("complement_direct_sum", "k^Q / J = (E-span) + (span with K-part m != 0)", false,
              "quotient is not nilpotent within the PBW degree bound");
    return;
  }
  const auto c = complement_witness(cq, f, gq);
  json r;
  r["name"] = "complement";
  r.update(complement_json(c));
  rep.results.push_back(r);
  rep.check("complement_direct_sum", "k^Q / J = (E-span) + (span with K-part m != 0)", c.direct_sum(),
            {{"subalgebra", c.subalgebra}, {"complement", c.complement}, {"total", c.total}});
  rep.check("complement_bimodule", "the complement is stable under both-sided multiplication by Psi(E_i)",
            c.left_stable && c.right_stable);
}

template <ScalarField F>
void cmd_verify(const RunConfig& cfg, const CartanMatrix& c, const F& f, Report& rep) {
  CayleyQuiver cq(c, cfg.n, cfg.vertex_budget);
  std::vector<std::string> suites = cfg.suites;
  if (suites.empty()) suites = {"hopf", "fourier", "crossed", "ideal"};
  for (const auto& s : suites) {
    if (s == "hopf")
      suite_hopf(cq, f, rep);
    else if (s == "ideal")
      suite_ideal(cfg, cq, f, rep);
    else if (s == "fourier")
      suite_fourier(cq, f, rep);
    else if (s == "crossed")
      suite_crossed(cq, f, rep);
    else if (s == "complement")
      suite_complement(cfg, cq, f, rep);
    else
      throw ConfigError("unknown suite " + s);
  }
}

template <ScalarField F>
void dispatch(const RunConfig& cfg, const CartanMatrix& c, const F& f, Report& rep) {
  const std::string& cmd = cfg.command;
  if (cmd == "quiver")
    cmd_quiver(cfg, c, f, rep);
  else if (cmd == "dim")
    cmd_dim(cfg, c, f, rep, false);
  else if (cmd == "graded")
    cmd_dim(cfg, c, f, rep, true);
  else if (cmd == "blocks")
    cmd_blocks(cfg, c, f, rep);
  else if (cmd == "ext")
    cmd_ext(cfg, c, f, rep);
  else if (cmd == "classify")
    cmd_classify(cfg, c, f, rep);
  else if (cmd == "verify")
    cmd_verify(cfg, c, f, rep);
  else if (cmd == "witness")
    cmd_witness(cfg, c, f, rep);
  else
    throw ConfigError("unknown command " + cmd);
}

template <ScalarField F>
void run_with(const RunConfig& cfg, const CartanMatrix& c, const F& f, RunResult& out) {
  Report rep;
  out.report["instance"] = instance_json(c, cfg.n, f);
  dispatch(cfg, c, f, rep);
  out.report["results"] = rep.results;
  out.report["checks"] = rep.checks;
  out.exit_code = rep.all_passed() ? kExitOk : kExitVerificationFailure;
}

}  // namespace

CartanMatrix load_cartan_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw InvalidCartan("cannot read Cartan file " + path);
  json j;
  try {
    j = json::parse(is);
  } catch (const json::exception& e) {
    throw InvalidCartan("Cartan file is not valid JSON: " + std::string(e.what()));
  }
  if (j.contains("type") && j["type"].is_string()) return cartan_from_type(j["type"].get<std::string>());
  if (j.contains("matrix") && j["matrix"].is_array()) {
    try {
      return CartanMatrix(j["matrix"].get<std::vector<std::vector<int>>>(), "matrix");
    } catch (const json::exception& e) {
      throw InvalidCartan("matrix entries must be integers: " + std::string(e.what()));
    }
  }
  throw InvalidCartan("Cartan file needs a \"type\" string or a \"matrix\" array");
}

CartanMatrix resolve_cartan(const RunConfig& config) {
  if (config.type.empty() == config.matrix_file.empty())
    throw InvalidCartan("give exactly one of --type and --matrix-file");
  CartanMatrix c = config.type.empty() ? load_cartan_file(config.matrix_file) : cartan_from_type(config.type);
  const auto v = validate(c);
  if (!v.cartan()) throw InvalidCartan("matrix is not a symmetric Cartan matrix (a_ii = 2, a_ij = a_ji in {0, -1})");
  return c;
}

RunResult run(const RunConfig& config) {
  RunResult out;
  out.report["config"] = config_json(config);
  try {
    if (config.n < 1) throw ConfigError("--n must be at least 1");
    if (config.vertex_budget == 0) throw ConfigError("--vertex-budget must be positive");
    const CartanMatrix c = resolve_cartan(config);
    if (config.backend == "exact") {
      const CyclotomicField f(config.n);
      run_with(config, c, f, out);
    } else if (config.backend == "modular") {
      const PrimeField f(config.n, config.prime_floor);
      run_with(config, c, f, out);
    } else {
      throw ConfigError("unknown backend " + config.backend);
    }
  } catch (const BudgetExceeded& e) {
    out.exit_code = kExitBudgetExceeded;
    out.error = e.what();
  } catch (const PrimeUnavailable& e) {
    out.exit_code = kExitPrimeUnavailable;
    out.error = e.what();
  } catch (const InvalidCartan& e) {
    out.exit_code = kExitConfigError;
    out.error = e.what();
  } catch (const ConfigError& e) {
    out.exit_code = kExitConfigError;
    out.error = e.what();
  } catch (const DegreeCapExceeded& e) {
    out.exit_code = kExitBudgetExceeded;
    out.error = e.what();
  } catch (const Error& e) {
    out.exit_code = kExitConfigError;
    out.error = e.what();
  }
  if (!out.error.empty()) out.report["error"] = {{"exit_code", out.exit_code}, {"message", out.error}};
  return out;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"quiverq: half quantum groups at roots of unity as quiver algebras"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string suites;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--type", cfg.type, "named Cartan type: A<t>, D<t>, E6, E7, E8, products like A1xA1");
    sub->add_option("--matrix-file", cfg.matrix_file, "JSON file with {\"type\": ...} or {\"matrix\": [[...]]}");
    sub->add_option("--n", cfg.n, "order of the root of unity q")->required();
    sub->add_option("--backend", cfg.backend, "exact or modular")->check(CLI::IsMember({"exact", "modular"}));
    sub->add_option("--prime-floor", cfg.prime_floor, "modular backend: smallest p = 1 mod n above this floor");
    sub->add_option("--max-degree", cfg.max_degree, "degree cap for quotient builds (default PBW top degree + 1)");
    sub->add_option("--vertex-budget", cfg.vertex_budget, "largest Cayley quiver accepted");
    sub->add_option("--out", cfg.out, "write the report here instead of stdout");
    sub->add_flag("--serial", cfg.serial, "build quotient blocks serially");
  };
  for (const char* name : {"quiver", "dim", "graded", "blocks", "ext", "classify", "verify", "witness"}) {
    auto* sub = app.add_subcommand(name);
    common(sub);
    if (std::string(name) == "quiver") sub->add_option("--emit-graph", cfg.emit_graph, "write the quiver as DOT");
    if (std::string(name) == "dim" || std::string(name) == "graded")
      sub->add_flag("--root-vector-powers", cfg.root_vector_powers,
                    "also impose E_ij^e = 0 for height-two root vectors (diagnostic, not part of J)");
    if (std::string(name) == "verify")
      sub->add_option("--suite", suites, "comma list of hopf, fourier, crossed, ideal, complement");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (!suites.empty()) {
    std::stringstream ss(suites);
    std::string s;
    while (std::getline(ss, s, ','))
      if (!s.empty()) cfg.suites.push_back(s);
  }

  RunResult result = run(cfg);
  const std::string text = result.report.dump(2) + "\n";
  if (cfg.out.empty()) {
    out << text;
  } else {
    std::ofstream os(cfg.out);
    if (!os) {
      err << "error: cannot write " << cfg.out << "\n";
      return kExitConfigError;
    }
    os << text;
  }
  if (!result.error.empty()) err << "error: " << result.error << "\n";
  return result.exit_code;
}

}  // namespace quiverq

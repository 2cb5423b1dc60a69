#include "regpair/pairing.hpp"

namespace regpair {

LogSum pair0(const RationalFunction1& f, const Divisor& eps) {
  if (f.is_zero()) throw PreconditionError("pair0: zero function in the precycle");
  if (eps.degree() != 0)
    throw PreconditionError("pair0: eps must have degree 0 (got " +
                            std::to_string(eps.degree()) + ")");
  LogSum out;
  for (auto& [p, m] : eps.mult) {
    RationalFunction1::Eval v = f.eval(p);
    if (!v.is_value())
      throw DisjointnessError("pair0: point " + p.to_string() +
                              " lies on the divisor of " + f.to_string());
    out.add_log_abs(v.value, m);
  }
  return out;
}

LogSum pair0(const PrecycleCurve& beta, const ComponentDivisor& eps) {
  LogSum out;
  for (auto& [f, comp] : beta.terms) {
    auto it = eps.find(comp);
    if (it == eps.end()) continue;
    out += pair0(f, it->second);
  }
  return out;
}

PairingCheck reciprocity_check0(const RationalFunction1& f, const RationalFunction1& g) {
  Divisor df = principal_divisor(f);
  Divisor dg = principal_divisor(g);
  if (!df.disjoint_from(dg))
    throw DisjointnessError("reciprocity_check0: div(f) and div(g) share support");
  PairingCheck out{pair0(f, dg), pair0(g, df), false};
  out.equal = out.lhs.equals(out.rhs);
  return out;
}

PairingCheck projection_check0(const RationalFunction1& pi, const Divisor& eta,
                               const Divisor& eps) {
  if (eta.degree() != 0 || eps.degree() != 0)
    throw PreconditionError("projection_check0: cycles must have degree 0");
  if (pi.is_constant() || pi.is_zero())
    throw PreconditionError("projection_check0: constant map");
  Divisor pushed = pushforward_divisor(pi, eta);
  if (!pushed.disjoint_from(eps))
    throw DisjointnessError("projection_check0: |pi_* eta| meets |eps|");
  Divisor pulled = pullback_divisor(pi, eps);
  for (auto& [p, n] : eta.mult)
    if (pulled.contains(p))
      throw DisjointnessError("projection_check0: |eta| meets |pi^* eps|");

  RationalFunction1 f = function_from_divisor(eta);
  PairingCheck out{pair0(f, pulled), LogSum{}, false};
  if (!pushed.is_zero()) {
    RationalFunction1 g = function_from_divisor(pushed);
    out.rhs = pair0(g, eps);
  }
  out.equal = out.lhs.equals(out.rhs);
  return out;
}

namespace {

// Deterministic Q(i) grid: 2, 3, 4, ..., then the same with imaginary offsets.
GaussianRational grid_point(int k) {
  static const long imags[4] = {0, 1, -1, 2};
  long level = k / 4;
  long im = imags[k % 4];
  return GaussianRational(Rat(2 + level), Rat(im));
}

}  // namespace

Witness nondegeneracy_witness(const Divisor& eta, int budget) {
  if (eta.is_zero())
    throw PreconditionError("nondegeneracy_witness: eta must be nonzero");
  if (eta.degree() != 0)
    throw PreconditionError("nondegeneracy_witness: eta must have degree 0");
  for (int n = 0; n < budget; ++n) {
    // alternate between linear candidates and ratios of two grid linears
    RationalFunction1 g;
    if (n % 2 == 0) {
      GaussianRational a = grid_point(n / 2);
      if (eta.contains(P1Point(a)) || eta.contains(P1Point::infinity())) continue;
      g = RationalFunction1(Polynomial1::linear(a),
                            Polynomial1::constant(GaussianRational(1)));
    } else {
      GaussianRational a = grid_point(n / 2);
      GaussianRational b = grid_point(n / 2 + 7);
      if (a == b) continue;
      if (eta.contains(P1Point(a)) || eta.contains(P1Point(b))) continue;
      g = RationalFunction1(Polynomial1::linear(a), Polynomial1::linear(b));
    }
    LogSum v = pair0(g, eta);
    if (!v.is_zero()) return {g, v, n + 1};
  }
  throw BudgetError("nondegeneracy_witness: no candidate found within budget " +
                    std::to_string(budget));
}

void CurveConfiguration::validate_two_component() const {
  if (components.size() != 2)
    throw PreconditionError("configuration must have exactly two components");
  if (nodes.size() != 2)
    throw PreconditionError("configuration must have exactly two nodes");
  for (const Node& n : nodes) {
    bool ab = n.comp_a == components[0] && n.comp_b == components[1];
    bool ba = n.comp_a == components[1] && n.comp_b == components[0];
    if (!ab && !ba)
      throw PreconditionError("each node must join the two components");
  }
  auto side = [&](const Node& n, const std::string& comp) {
    return n.comp_a == comp ? n.a : n.b;
  };
  for (const std::string& comp : components) {
    if (side(nodes[0], comp) == side(nodes[1], comp))
      throw PreconditionError("node points must be distinct on component " + comp);
  }
}

namespace {

struct NodalData {
  // node points r1, r2 as seen on each component
  P1Point a1, a2;  // on the first component
  P1Point b1, b2;  // on the second
  RationalFunction1 phi_a, phi_b;
};

NodalData prepare(const CurveConfiguration& config, const Pic00Element& gamma) {
  config.validate_two_component();
  const std::string& A = config.components[0];
  const std::string& B = config.components[1];
  auto side = [&](const CurveConfiguration::Node& n, const std::string& comp) {
    return n.comp_a == comp ? n.a : n.b;
  };
  NodalData d;
  d.a1 = side(config.nodes[0], A);
  d.a2 = side(config.nodes[1], A);
  d.b1 = side(config.nodes[0], B);
  d.b2 = side(config.nodes[1], B);

  Divisor ga, gb;
  if (auto it = gamma.find(A); it != gamma.end()) ga = it->second;
  if (auto it = gamma.find(B); it != gamma.end()) gb = it->second;
  for (auto* dv : {&ga, &gb}) {
    if (dv->degree() != 0)
      throw PreconditionError("gamma must have degree 0 on each component");
  }
  for (const P1Point& p : {d.a1, d.a2})
    if (ga.contains(p))
      throw PreconditionError("gamma support touches a node on " + A);
  for (const P1Point& p : {d.b1, d.b2})
    if (gb.contains(p))
      throw PreconditionError("gamma support touches a node on " + B);
  d.phi_a = function_from_divisor(ga);
  d.phi_b = function_from_divisor(gb);
  return d;
}

GaussianRational value_at(const RationalFunction1& f, const P1Point& p) {
  auto v = f.eval(p);
  if (!v.is_value()) throw Error("internal: node evaluation hit a zero/pole");
  return v.value;
}

}  // namespace

GaussianRational pic00_h(const CurveConfiguration& config, const Pic00Element& gamma) {
  NodalData d = prepare(config, gamma);
  GaussianRational ratio_a = value_at(d.phi_a, d.a1) / value_at(d.phi_a, d.a2);
  GaussianRational ratio_b = value_at(d.phi_b, d.b1) / value_at(d.phi_b, d.b2);
  return ratio_a / ratio_b;
}

PairingCheck hmap_log_identity(const CurveConfiguration& config, const Pic00Element& gamma) {
  NodalData d = prepare(config, gamma);
  GaussianRational h = pic00_h(config, gamma);
  PairingCheck out;
  out.lhs.add_log_abs(h, 1);
  // <r1 - r2, gamma>_A  +  <r2 - r1, gamma>_B
  Divisor ra, rb;
  ra.add(d.a1, 1);
  ra.add(d.a2, -1);
  rb.add(d.b1, -1);
  rb.add(d.b2, 1);
  out.rhs = pair0(d.phi_a, ra) + pair0(d.phi_b, rb);
  out.equal = out.lhs.equals(out.rhs);
  return out;
}

LogSum nodal_regulator(const CurveConfiguration& config, const Pic00Element& gamma,
                       long deg_delta_n) {
  PairingCheck id = hmap_log_identity(config, gamma);
  return id.rhs.scaled(deg_delta_n);
}

}  // namespace regpair

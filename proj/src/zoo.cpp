#include "socle/zoo.hpp"

namespace socle {

namespace {

RingPtr make_ring(std::vector<std::string> names, std::vector<std::uint32_t> weights, const Field& f) {
  RingSpec s;
  s.names = std::move(names);
  s.weights = weights.empty() ? std::vector<std::uint32_t>(s.names.size(), 1) : std::move(weights);
  s.field = f;
  return Ring::make(std::move(s));
}

ZooEntry entry(std::string id, std::string description, RingPtr R, const std::string& quotient) {
  return ZooEntry{std::move(id), std::move(description), LocalRing(R, parse_polynomial_list(R, quotient)),
                  0, 0, {}, std::nullopt, std::nullopt, false};
}

std::string var(unsigned i) {
  return "X" + std::to_string(i);
}

}  // namespace

ZooEntry build_almost_dvr(const Field& f) {
  auto z = entry("almost-dvr", "k[X,Y]/(X^2, X*Y)", make_ring({"X", "Y"}, {}, f), "X^2, X*Y");
  z.dim = 1;
  z.multiplicity = 1;
  z.h0 = {"X"};
  z.depth = 0;
  return z;
}

ZooEntry build_semigroup(unsigned e, const Field& f) {
  if (e < 3) throw InputError("semigroup ring needs e >= 3");
  if (e > kMaxVars - 1) throw InputError("semigroup ring: e too large");
  std::vector<std::string> names;
  std::vector<std::uint32_t> weights;
  for (unsigned i = 1; i <= e; ++i) {
    names.push_back(var(i));
    weights.push_back(e + i - 1);
  }
  // column j of the matrix: (Xj, X(j+1)) with X(e+1) = X1^2
  auto top = [&](unsigned j) { return var(j); };
  auto bottom = [&](unsigned j) { return j == e ? std::string("X1^2") : var(j + 1); };
  auto minor = [&](unsigned i, unsigned j) { return top(i) + "*" + bottom(j) + " - " + bottom(i) + "*" + top(j); };
  std::string q;
  for (unsigned i = 1; i <= e; ++i) {
    for (unsigned j = i + 1; j <= e; ++j) {
      if (i == 2 && j == e) continue;
      if (!q.empty()) q += ", ";
      q += minor(i, j);
    }
  }
  std::string delta = "(" + minor(2, e) + ")";
  for (unsigned i = 1; i <= e; ++i) q += ", " + delta + "*" + var(i);
  auto R = make_ring(names, weights, f);
  auto z = entry("semigroup-e" + std::to_string(e),
                 "k[X1..X" + std::to_string(e) + "] graded by the semigroup <" + std::to_string(e) + ".." +
                     std::to_string(2 * e - 1) + ">, one minor moved to the socle",
                 R, q);
  z.dim = 1;
  z.multiplicity = e;
  z.h0 = {parse_polynomial(R, minor(2, e)).normalized().to_string()};
  z.depth = 0;
  z.type = e;
  z.buchsbaum = true;
  return z;
}

Polynomial semigroup_delta(const ZooEntry& entry) {
  const auto& R = entry.ring.ring();
  unsigned e = static_cast<unsigned>(R->arity());
  return parse_polynomial(R, "X2*X1^2 - X3*" + var(e));
}

ZooEntry build_plane_line(unsigned l, const Field& f) {
  if (l < 1) throw InputError("plane-line needs l >= 1");
  std::string xl = l == 1 ? "X" : "X^" + std::to_string(l);
  auto z = entry("plane-line-l" + std::to_string(l), "k[X,Y,Z]/(" + xl + ") cap (Y,Z)",
                 make_ring({"X", "Y", "Z"}, {}, f), xl + "*Y, " + xl + "*Z");
  z.dim = 2;
  z.multiplicity = l;
  z.depth = 1;
  return z;
}

ZooEntry build_fat_line(const Field& f) {
  auto z = entry("fat-line", "k[X,Y,Z]/(X^3, X*Y, Y^2 - X*Z)", make_ring({"X", "Y", "Z"}, {}, f),
                 "X^3, X*Y, Y^2 - X*Z");
  z.dim = 1;
  z.multiplicity = 3;
  z.h0 = {"X^2"};
  z.depth = 0;
  z.type = 3;
  z.buchsbaum = true;
  return z;
}

ZooEntry build_regular(unsigned d, const Field& f) {
  if (d < 1 || d > kMaxVars) throw InputError("regular ring dimension out of range");
  std::vector<std::string> names;
  if (d <= 3) {
    names = std::vector<std::string>{"X", "Y", "Z"};
    names.resize(d);
  } else {
    for (unsigned i = 1; i <= d; ++i) names.push_back(var(i));
  }
  std::string desc = "k[";
  for (std::size_t i = 0; i < names.size(); ++i) desc += (i ? "," : "") + names[i];
  auto z = entry("regular-d" + std::to_string(d), desc + "]", make_ring(names, {}, f), "");
  z.dim = d;
  z.multiplicity = 1;
  z.depth = d;
  z.type = 1;
  z.buchsbaum = true;
  return z;
}

ZooEntry build_two_planes(const Field& f) {
  auto z = entry("two-planes", "k[X,Y,Z,W]/(X,Y) cap (Z,W)", make_ring({"X", "Y", "Z", "W"}, {}, f),
                 "X*Z, X*W, Y*Z, Y*W");
  z.dim = 2;
  z.multiplicity = 2;
  z.depth = 1;
  z.buchsbaum = true;
  return z;
}

ZooEntry build_quadric_cone(const Field& f) {
  auto z = entry("quadric-cone", "k[X,Y,Z]/(X*Y - Z^2)", make_ring({"X", "Y", "Z"}, {}, f), "X*Y - Z^2");
  z.dim = 2;
  z.multiplicity = 2;
  z.depth = 2;
  z.type = 1;
  z.buchsbaum = true;
  return z;
}

std::vector<std::string> zoo_ids() {
  return {"almost-dvr",   "semigroup-e3", "semigroup-e4", "semigroup-e5", "plane-line-l1", "plane-line-l2",
          "plane-line-l3", "fat-line",     "regular-d1",   "regular-d2",   "regular-d3",    "two-planes",
          "quadric-cone"};
}

ZooEntry build_zoo(const std::string& id, const Field& f) {
  auto suffix = [&](const std::string& prefix) -> std::optional<unsigned> {
    if (id.rfind(prefix, 0) != 0 || id.size() == prefix.size()) return std::nullopt;
    try {
      std::size_t pos = 0;
      unsigned v = static_cast<unsigned>(std::stoul(id.substr(prefix.size()), &pos));
      if (pos != id.size() - prefix.size()) return std::nullopt;
      return v;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  if (id == "almost-dvr") return build_almost_dvr(f);
  if (id == "fat-line") return build_fat_line(f);
  if (id == "two-planes") return build_two_planes(f);
  if (id == "quadric-cone") return build_quadric_cone(f);
  if (auto e = suffix("semigroup-e")) return build_semigroup(*e, f);
  if (auto l = suffix("plane-line-l")) return build_plane_line(*l, f);
  if (auto d = suffix("regular-d")) return build_regular(*d, f);
  throw InputError("unknown zoo id: " + id);
}

ZooCheck verify_entry(const ZooEntry& z) {
  ZooCheck c;
  auto miss = [&](std::string what, const std::string& want, const std::string& got) {
    c.ok = false;
    c.mismatches.push_back(std::move(what) + ": expected " + want + ", computed " + got);
  };
  const LocalRing& A = z.ring;
  if (A.dim() != z.dim) miss("dim", std::to_string(z.dim), std::to_string(A.dim()));
  if (A.multiplicity() != z.multiplicity) {
    miss("multiplicity", std::to_string(z.multiplicity), std::to_string(A.multiplicity()));
  }
  auto w = h0(A);
  std::vector<Polynomial> expected;
  for (const auto& s : z.h0) expected.push_back(parse_polynomial(A.ring(), s));
  if (!equal_as_S_ideals(A.lift(A.ideal(w)), A.lift(A.ideal(expected)))) {
    miss("H0", A.ideal(expected).to_string(), A.ideal(w).to_string());
  }
  if (z.depth) {
    unsigned d = depth_probe(A);
    if (d != *z.depth) miss("depth", std::to_string(*z.depth), std::to_string(d));
  }
  return c;
}

}  // namespace socle

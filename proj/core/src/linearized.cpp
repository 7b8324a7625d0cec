#include "autoeq/linearized.hpp"

#include <sstream>

#include "autoeq/errors.hpp"

namespace autoeq {

Sign sign_from_int(int s) {
  if (s == 1) return Sign::plus;
  if (s == -1) return Sign::minus;
  throw DomainError("linearisation sign must be +1 or -1, got " + std::to_string(s));
}

std::string symbol(Sign s) { return s == Sign::plus ? "+" : "-"; }

Sign parse_sign(const std::string& text) {
  if (text == "+" || text == "+1" || text == "1" || text == "plus") return Sign::plus;
  if (text == "-" || text == "-1" || text == "minus") return Sign::minus;
  throw ConfigError("not a linearisation sign: '" + text + "' (expected + or -)");
}

FormalGenerator::FormalGenerator(std::string name, GradedDims endo, int dim, bool calabi_yau)
    : name_(std::move(name)), endo_(std::move(endo)), dim_(dim), calabi_yau_(calabi_yau) {
  if (name_.empty()) throw DomainError("generator name must not be empty");
  if (endo_.at(0) != 1)
    throw DomainError("generator " + name_ + " is not simple: Hom^0 = " + endo_.at(0).get_str());
  if (dim_ < 1) throw DomainError("generator " + name_ + " has ambient dimension < 1");
}

FormalGenerator FormalGenerator::spherical(std::string name, int dim) {
  GradedDims endo;
  endo.set(0, 1);
  endo.set(dim, endo.at(dim) + 1);
  return FormalGenerator(std::move(name), std::move(endo), dim, true);
}

bool is_spherical(const FormalGenerator& g) {
  GradedDims sphere;
  sphere.set(0, 1);
  sphere.set(g.dim(), 1);
  return g.calabi_yau() && g.endo() == sphere;
}

LinBoxObject::LinBoxObject(FormalGenerator g, int power, int shift_by, Sign s)
    : gen(std::move(g)), n(power), shift(shift_by), sign(s) {
  if (n < 1) throw DomainError("box power must be >= 1");
  if (n > kMaxPower)
    throw DomainError("box power " + std::to_string(n) + " exceeds the cap " +
                      std::to_string(kMaxPower));
}

LinBoxObject LinBoxObject::shifted(int k) const {
  LinBoxObject out = *this;
  out.shift += k;
  return out;
}

LinBoxObject LinBoxObject::unshifted() const {
  LinBoxObject out = *this;
  out.shift = 0;
  return out;
}

std::string LinBoxObject::to_string() const {
  std::ostringstream os;
  os << gen.name();
  if (n > 1 || sign == Sign::minus) os << "^{" << (sign == Sign::minus ? "-" : "") << "[" << n << "]}";
  if (shift != 0) os << "[" << shift << "]";
  return os.str();
}

void Declarations::add_generator(FormalGenerator g) {
  const auto name = g.name();
  if (!generators_.emplace(name, std::move(g)).second)
    throw DomainError("generator " + name + " declared twice");
}

void Declarations::declare_orthogonal(const std::string& generator, const std::string& companion) {
  if (!has(generator)) throw DomainError("unknown generator " + generator);
  if (!has(companion)) throw DomainError("unknown companion " + companion);
  if (generator == companion)
    throw DomainError("a simple object cannot lie in its own orthogonal: " + generator);
  if (!is_orthogonal(generator, companion)) companions_.push_back({companion, generator});
}

const FormalGenerator& Declarations::generator(const std::string& name) const {
  auto it = generators_.find(name);
  if (it == generators_.end()) throw DomainError("unknown generator " + name);
  return it->second;
}

bool Declarations::is_orthogonal(const std::string& e, const std::string& f) const {
  for (const auto& c : companions_)
    if (c.of == e && c.name == f) return true;
  return false;
}

std::vector<OrthogonalCompanion> Declarations::companions_of(const std::string& e) const {
  std::vector<OrthogonalCompanion> out;
  for (const auto& c : companions_)
    if (c.of == e) out.push_back(c);
  return out;
}

Declarations Declarations::standard() {
  Declarations d;
  d.add_generator(FormalGenerator::spherical("E"));
  d.add_generator(FormalGenerator::spherical("F"));
  d.declare_orthogonal("E", "F");
  return d;
}

GradedDims equivariant_hom(const LinBoxObject& a, const LinBoxObject& b, const HomOptions& options) {
  if (!(a.gen == b.gen))
    throw ClosureError("Hom(" + a.to_string() + ", " + b.to_string() +
                       ") between different generators without a declared orthogonality");
  if (a.n != b.n)
    throw ClosureError("Hom(" + a.to_string() + ", " + b.to_string() + ") between different powers");

  // Hom^*(E^{(x)n}, E^{(x)n}) = End^*(E)^{(x)n}; the two linearisations make
  // S_n act on it through chi_A^{-1} chi_B = sign^{[signs differ]}.
  const Character character = (a.sign * b.sign) == Sign::plus ? Character::trivial : Character::sign;
  const auto invariant = isotypic_dims(a.gen.endo(), a.n, character, {options.koszul_signs});
  return shift(invariant, b.shift - a.shift);
}

GradedDims equivariant_hom(const Declarations& decls, const LinBoxObject& a, const LinBoxObject& b,
                           const HomOptions& options) {
  if (!(a.gen == b.gen) && a.n == b.n && decls.is_orthogonal(a.gen.name(), b.gen.name()))
    return {};
  return equivariant_hom(a, b, options);
}

PnObjectReport is_pn_object(const LinBoxObject& a, const HomOptions& options) {
  if (!is_spherical(a.gen) || a.gen.dim() != 2)
    throw DomainError("P^n-object check needs a spherical generator on a surface; " + a.gen.name() +
                      " has Ext^* = " + a.gen.endo().to_string());
  PnObjectReport report{a, equivariant_hom(a, a, options), false, {}, false};
  report.dims_match = report.endomorphisms == projective_space_dims(a.n);
  report.ring = invariant_subalgebra(SubsetAlgebra(a.n), Character::trivial);
  report.ring_matches = report.ring.ring_check_passed();
  return report;
}

IsomorphismVerdict are_isomorphic(const LinBoxObject& a, const LinBoxObject& b,
                                  const HomOptions& options) {
  if (!(a.gen == b.gen) || a.n != b.n)
    throw DomainError("are_isomorphic compares linearisations of one box power; got " +
                      a.to_string() + " and " + b.to_string());
  IsomorphismVerdict v;
  if (a.n >= 2 && a.sign != b.sign) {
    const auto hom = equivariant_hom(a.unshifted(), b.unshifted(), options);
    v.degree_zero_hom = hom.at(0);
    v.isomorphic = false;
    v.reason = hom.at(0) == 0
                   ? "opposite linearisations: Hom^0 = 0, so no morphism can be invertible"
                   : "opposite linearisations of a simple invariant object";
    return v;
  }
  if (a.shift != b.shift) {
    v.isomorphic = false;
    v.reason = "shift mismatch: " + std::to_string(a.shift) + " vs " + std::to_string(b.shift);
    return v;
  }
  v.isomorphic = true;
  v.reason = a.n == 1 && a.sign != b.sign ? "n = 1: both linearisations are the object itself"
                                          : "same linearisation and shift";
  return v;
}

}  // namespace autoeq

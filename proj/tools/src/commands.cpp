#include "autoeq_tools/commands.hpp"

#include <sstream>

#include "autoeq/errors.hpp"
#include "autoeq/subset_algebra.hpp"
#include "autoeq/symmetric_group.hpp"
#include "autoeq/twist.hpp"

namespace autoeq::tools {

namespace {

const FormalGenerator& lookup(const Declarations& decls, const std::string& gen) {
  if (!decls.has(gen)) throw ConfigError("unknown generator '" + gen + "'");
  return decls.generator(gen);
}

Json int_cell(const Integer& x) { return autoeq::to_json(x); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

bool has_brute_force_model(const FormalGenerator& g) { return is_spherical(g) && g.dim() == 2; }

}  // namespace

std::vector<int> n_values(const RunConfig& cfg, std::optional<int> n) {
  if (n) return {*n};
  std::vector<int> out;
  for (int k = cfg.n_min; k <= cfg.n_max; ++k) out.push_back(k);
  return out;
}

MukaiVector parse_vector(const std::string& text) {
  std::string s;
  for (char c : text) s += (c == '(' || c == ')' || c == ',') ? ' ' : c;
  std::istringstream in(s);
  MukaiVector v;
  std::string token;
  while (in >> token) {
    Integer x;
    if (x.set_str(token, 10) != 0) throw ConfigError("not an integer vector: '" + text + "'");
    v.push_back(x);
  }
  if (v.empty()) throw ConfigError("empty vector: '" + text + "'");
  return v;
}

std::string vector_text(const MukaiVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
  return out + ")";
}

CommandResult cmd_homs(const RunConfig& cfg, const HomsArgs& args) {
  const auto& g = lookup(cfg.declarations, args.gen);
  const Sign sa = parse_sign(args.sign_a);
  const Sign sb = parse_sign(args.sign_b);
  const LinBoxObject a(g, args.n, args.shift_a, sa);
  const LinBoxObject b(g, args.n, args.shift_b, sb);
  const auto dims = equivariant_hom(a, b, cfg.hom_options());

  CommandResult result;
  Table t;
  t.title = "Hom^*(" + a.to_string() + ", " + b.to_string() + ")";
  t.columns = {"degree", "dim"};
  for (const auto& [d, dim] : dims.entries()) t.add_row({d, int_cell(dim)});
  const Character character = sa == sb ? Character::trivial : Character::sign;
  t.notes.push_back("method: cycle index of S_" + std::to_string(args.n) + ", " + to_string(character) +
                    " isotypic part of End^*(" + g.name() + ")^(x)" + std::to_string(args.n));

  if (!has_brute_force_model(g)) {
    t.notes.push_back("brute-force cross-check: not applicable, End^*(" + g.name() + ") = " +
                      g.endo().to_string());
  } else if (args.n > kMaxBruteForcePower) {
    t.notes.push_back("brute-force cross-check: skipped, n > " + std::to_string(kMaxBruteForcePower));
  } else {
    const auto brute =
        shift(brute_force_isotypic(SubsetAlgebra(args.n), character), args.shift_b - args.shift_a);
    const bool agree = brute == dims;
    t.notes.push_back(std::string("brute-force projector cross-check: ") +
                      (agree ? "agree" : "DISAGREE, projector gives " + brute.to_string()));
    if (!agree) result.exit_code = kPropertyFailure;
  }
  if (sa != sb && !dims.empty())
    t.notes.push_back("nonzero although " + g.name() + "^{[n]} and " + g.name() +
                      "^{-[n]} are claimed orthogonal: documented deviation for n = 2");
  result.tables.push_back(std::move(t));
  return result;
}

CommandResult cmd_pn_check(const RunConfig& cfg, const std::string& gen, const std::vector<int>& ns) {
  const auto& g = lookup(cfg.declarations, gen);
  CommandResult result;
  Table t;
  t.title = "P^n-object check for " + gen + "^{[n]}";
  t.columns = {"n", "Hom^*", "dims = H^*(P^n)", "ring k[h]/h^(n+1)", "verdict"};
  for (int n : ns) {
    const auto report = is_pn_object(LinBoxObject(g, n, 0, Sign::plus), cfg.hom_options());
    t.add_row({n, report.endomorphisms.to_string(), yes_no(report.dims_match), yes_no(report.ring_matches),
               report.is_pn_object() ? "P^n-object" : "FAIL"});
    if (!report.is_pn_object()) result.exit_code = kPropertyFailure;
  }
  t.notes.push_back("ring: generator h = h_1 + ... + h_n, h^(n+1) = 0, h^n = n! h_1...h_n");
  result.tables.push_back(std::move(t));
  return result;
}

CommandResult cmd_twist_table(const RunConfig& cfg, const std::string& gen, int n,
                              const std::optional<std::string>& word) {
  lookup(cfg.declarations, gen);
  CommandResult result;
  if (word) {
    const auto w = FunctorWord::parse(*word);
    Table t;
    t.title = "values of " + w.to_string();
    t.columns = {"object", "image", "shift"};
    for (const auto& x : rule_closure(cfg.declarations, w)) {
      try {
        const auto y = apply(cfg.declarations, w, x);
        t.add_row({x.to_string(), y.to_string(), y.shift - x.shift});
      } catch (const ClosureError&) {
        t.add_row({x.to_string(), "undetermined", nullptr});
      }
    }
    const auto witness = exoticness_witness(cfg.declarations, w);
    t.notes.push_back(witness.found ? "exoticness witness: " + witness.to_string()
                                    : "no differential-shift pair in the closure");
    result.tables.push_back(std::move(t));
    return result;
  }
  const auto table = value_table(cfg.declarations, gen, n);
  Table t;
  t.title = "shift k with F(A) = A[k], n = " + std::to_string(n);
  t.columns = {"functor"};
  for (const auto& c : table.columns) t.columns.push_back(c.to_string());
  for (const auto& row : table.rows) {
    std::vector<Json> cells{row.functor};
    for (int s : row.shifts) cells.push_back(s);
    t.add_row(std::move(cells));
  }
  t.notes = table.notes;
  result.tables.push_back(std::move(t));
  return result;
}

CommandResult cmd_k_action(const RunConfig& cfg, const std::optional<MukaiVector>& spherical_class,
                           const std::vector<int>& ns) {
  const auto lattice = cfg.lattice_or_default();
  const auto e = spherical_class ? *spherical_class : lattice.structure_sheaf();
  const auto t_e = reflection_isometry(lattice, e);
  CommandResult result;

  Table t;
  t.title = "K-class action, e = " + vector_text(e);
  t.columns = {"v", "chi(e,v)", "T_E(v)", "P_E(v)"};
  std::vector<MukaiVector> probes;
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    MukaiVector b(lattice.rank());
    b[i] = 1;
    probes.push_back(b);
  }
  probes.push_back(lattice.structure_sheaf());
  probes.push_back(lattice.point());
  bool ok = true;
  for (const auto& v : probes) {
    const auto pv = p_twist_class_action(lattice, e, v);
    ok = ok && pv == v;
    t.add_row({vector_text(v), int_cell(lattice.euler_form(e, v)), vector_text(t_e(v)), vector_text(pv)});
  }
  const bool involution = t_e.compose(t_e) == ClassIsometry::identity(lattice);
  ok = ok && involution;
  t.notes.push_back("t_e preserves the pairing: yes; t_e^2 = id: " + yes_no(involution));
  result.tables.push_back(std::move(t));

  Table induced;
  induced.title = "induced class map on Sym^n K, phi = t_e";
  induced.columns = {"n", "F", "[s(F)] -> [s'(phi F)]", "rank of Sym^n"};
  for (int n : ns) {
    if (n > kMaxBruteForcePower) {
      induced.notes.push_back("n = " + std::to_string(n) + " skipped (cap " +
                              std::to_string(kMaxBruteForcePower) + ")");
      continue;
    }
    const auto map = induced_class_map(lattice, t_e, n);
    for (const auto& f : {lattice.point(), e}) {
      const bool match = map(s_class(lattice, f, n)) == s_prime_class(lattice, t_e, t_e(f), n);
      ok = ok && match;
      induced.add_row({n, vector_text(f), yes_no(match), map.matrix().rows()});
    }
  }
  result.tables.push_back(std::move(induced));
  if (!ok) result.exit_code = kPropertyFailure;
  return result;
}

CommandResult cmd_mu_inject(const RunConfig& cfg, const std::optional<MukaiVector>& a0,
                            const std::vector<int>& ns, std::size_t samples, std::uint64_t seed) {
  const auto lattice = cfg.lattice_or_default();
  const auto base = a0 ? *a0 : lattice.structure_sheaf();
  CommandResult result;
  Table t;
  t.title = "mu(a) = e a + (n-1) chi(a) a0, a0 = " + vector_text(base);
  t.columns = {"n", "e", "dim ker mu", "dim ker(Y mu)", "ker in Q a0", "mu(a0) = e n a0",
               "samples ok", "injective"};
  for (int n : ns) {
    const auto r = mu_injectivity_check(lattice, base, n, samples, seed);
    t.add_row({n, int_cell(r.e), r.kernel_dimension, r.quotient_kernel_dimension,
               yes_no(r.quotient_kernel_is_a0_line), yes_no(r.image_of_a0_is_ena0),
               std::to_string(r.samples_ok) + "/" + std::to_string(r.samples), yes_no(r.injective())});
    if (!r.injective()) result.exit_code = kPropertyFailure;
  }
  t.notes.push_back("Y: rows spanning the annihilator of a0");
  result.tables.push_back(std::move(t));
  return result;
}

CommandResult cmd_cover(const RunConfig& cfg) {
  const auto& d = cfg.cover;
  CommandResult result;
  Table t;
  t.title = "cover calculus";
  t.columns = {"statement", "value"};
  auto add = [&](const std::string& s, const std::string& v) { t.add_row({s, v}); };

  for (const auto& name : d.generator_names()) {
    const auto a = CoverObject::single(d, name);
    add("pi^* pi_* " + name, pullback_pushforward(d, a).to_string());
  }
  for (const auto& name : d.generator_names()) {
    const auto pa = QuotientObject::pushforward(CoverObject::single(d, name));
    for (const auto& other : d.generator_names()) {
      const auto pb = QuotientObject::pushforward(CoverObject::single(d, other));
      try {
        add("Hom(pi_*" + name + ", pi_*" + other + ")", hom_on_quotient(d, pa, pb).to_string());
      } catch (const ClosureError&) {
        add("Hom(pi_*" + name + ", pi_*" + other + ")", "undetermined");
      }
    }
  }
  for (const auto& name : d.generator_names()) {
    if (!d.is_tau_invariant(name)) continue;
    const auto pair = descend(d, CoverFunctor::twist(name));
    add("descend " + pair.lifted.to_string(), pair.first.to_string() + ", " + pair.second.to_string());
    for (const auto& phi : {pair.first, pair.second}) {
      std::vector<QuotientObject> probes{QuotientObject::pushforward(CoverObject::single(d, name))};
      for (const auto& f : d.orthogonal_companions(name))
        probes.push_back(QuotientObject::pushforward(CoverObject::single(d, f)));
      for (const auto& c : d.quotient_companions(name)) probes.push_back(QuotientObject::companion_pair(c));
      for (const auto& x : probes) {
        const auto image = apply_descended(d, phi, x);
        std::string value = image.object.to_string();
        for (const auto& amb : image.ambiguities) value += "  (" + amb + ")";
        add(phi.to_string() + " (" + x.to_string() + ")", value);
      }
      for (std::size_t i = 0; i < probes.size(); ++i)
        add(phi.to_string() + "^[2] on (" + probes[i].to_string() + ")^(x)2",
            "shift " + std::to_string(descended_box_shift(d, phi, probes[i], 2)));
    }
  }
  result.tables.push_back(std::move(t));

  const auto book = lift_descend_bookkeeping(2);
  Table lifts;
  lifts.title = "lifts along the double cover";
  lifts.columns = {"functor on X", "lifts"};
  for (const auto& row : book.rows) {
    std::string s = "{";
    for (std::size_t i = 0; i < row.lifts.size(); ++i) s += (i ? ", " : "") + row.lifts[i];
    lifts.add_row({row.functor, s + "}"});
  }
  lifts.notes = book.summary;
  if (!book.k_to_one()) result.exit_code = kPropertyFailure;
  result.tables.push_back(std::move(lifts));
  return result;
}

CommandResult cmd_report(const RunConfig& cfg) {
  CommandResult result;
  const auto& e = cfg.declarations.generators().begin()->second;
  const auto ns = n_values(cfg, std::nullopt);

  Table homs;
  homs.title = "equivariant Hom of linearised box powers of " + e.name();
  homs.columns = {"n", "Hom^*(E^[n], E^[n])", "Hom^*(E^[n], E^-[n])"};
  for (int n : ns) {
    const LinBoxObject p(e, n, 0, Sign::plus);
    const LinBoxObject m(e, n, 0, Sign::minus);
    homs.add_row({n, equivariant_hom(p, p, cfg.hom_options()).to_string(),
                  equivariant_hom(p, m, cfg.hom_options()).to_string()});
  }
  result.tables.push_back(std::move(homs));

  Table shifts;
  shifts.title = "shifts on (E^[n], E^-[n])";
  shifts.columns = {"n", "P_{E^[n]}", "P_{E^-[n]}", "T_E^[n]", "T_E^-[n]"};
  for (int n : ns) {
    const auto vt = value_table(cfg.declarations, e.name(), n);
    std::vector<Json> row{n};
    for (const auto& r : vt.rows)
      row.push_back("(" + std::to_string(r.shifts[0]) + "," + std::to_string(r.shifts[1]) + ")");
    shifts.add_row(std::move(row));
  }
  result.tables.push_back(std::move(shifts));

  Table groups;
  groups.title = "linearisation data";
  groups.columns = {"group", "H^1(G,k*)", "H^2(G,k*)", "linearisations"};
  for (auto family : {GroupFamily::cyclic, GroupFamily::symmetric})
    for (int n = 1; n <= kMaxPower; ++n) {
      const auto g = GroupCohomologyTable::lookup(family, n);
      groups.add_row({g.group_name(), g.h1.to_string(), g.h2.to_string(),
                      int_cell(linearization_count(g, true))});
    }
  result.tables.push_back(std::move(groups));

  auto mu = cmd_mu_inject(cfg, std::nullopt, ns, 20, 1);
  auto cover = cmd_cover(cfg);
  for (auto& t : mu.tables) result.tables.push_back(std::move(t));
  for (auto& t : cover.tables) result.tables.push_back(std::move(t));
  result.exit_code = std::max(mu.exit_code, cover.exit_code);
  return result;
}

}  // namespace autoeq::tools

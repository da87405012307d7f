#include "trusslab/exactness.hpp"

#include <algorithm>
#include <string>

#include "trusslab/parallel.hpp"

namespace trusslab {

  namespace {

    bool contains(std::vector<Elem> const& sorted, Elem x) {
      return std::binary_search(sorted.begin(), sorted.end(), x);
    }

    // Inverse of an injective map on its image; entries outside the image
    // hold the target order.
    std::vector<Elem> partial_inverse(ModuleMorphism const& f) {
      std::vector<Elem> inv(f.target().order(), f.source().order());
      for (Elem x = 0; x < f.source().order(); ++x) {
        inv[f(x)] = x;
      }
      return inv;
    }

    [[noreturn]] void obligation_failed(std::string const& what, std::vector<Elem> witness = {}) {
      fail(ErrorKind::internal_assertion, what, std::move(witness));
    }

    // Runs a construction step, turning any library error into an internal
    // assertion that names the step.
    template <typename F>
    auto step(std::string const& name, F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (Error const& e) {
        if (e.kind() == ErrorKind::internal_assertion || e.kind() == ErrorKind::precondition_failed) {
          throw;
        }
        fail(ErrorKind::internal_assertion, name + ": " + e.what(), e.witness());
      }
    }

  }  // namespace

  std::optional<SequenceWitness> check_exact(ModuleMorphism const& f, ModuleMorphism const& g) {
    if (!(f.target() == g.source())) {
      fail(ErrorKind::not_composable, "check_exact: target of f is not the source of g");
    }
    auto image = f.image();
    for (Elem e : g.image()) {
      if (g.preimage(e) == image) {
        auto abs = absorbers(g.target());
        return SequenceWitness{f, g, e, contains(abs, e)};
      }
    }
    return std::nullopt;
  }

  std::optional<ShortExactTriple> check_short_exact(ModuleMorphism const& i, ModuleMorphism const& pi) {
    if (!(i.target() == pi.source())) {
      fail(ErrorKind::not_composable, "check_short_exact: target of i is not the source of pi");
    }
    if (!i.is_injective() || !pi.is_surjective()) {
      return std::nullopt;
    }
    auto exact = check_exact(i, pi);
    if (!exact) {
      return std::nullopt;
    }
    return step("check_short_exact", [&] {
      auto [q, proj] = quotient_module(submodule_check(i.target(), i.image()));
      std::vector<Elem> iso(q.order());
      for (Elem c = 0; c < q.order(); ++c) {
        iso[c] = pi(proj.preimage(c)[0]);
      }
      ModuleMorphism induced(q, pi.target(), std::move(iso));
      if (!induced.is_injective() || !induced.is_surjective()) {
        obligation_failed("check_short_exact: N/Im i -> P is not bijective");
      }
      return std::optional<ShortExactTriple>(ShortExactTriple{i, pi, exact->basepoint, q, proj, induced});
    });
  }

  std::optional<ModuleMorphism> find_section(ModuleMorphism const& psi) {
    return least_hom(psi.target(), psi.source(), [&](Elem x, Elem y) { return psi(y) == x; });
  }

  std::optional<ModuleMorphism> find_retraction(ModuleMorphism const& phi) {
    if (!phi.is_injective()) {
      return std::nullopt;
    }
    auto inv = partial_inverse(phi);
    Elem out = phi.source().order();
    return least_hom(phi.target(), phi.source(), [&, out](Elem x, Elem y) { return inv[x] == out || inv[x] == y; });
  }

  SectionSplit split_by_section(ModuleMorphism const& phi, ModuleMorphism const& psi, ModuleMorphism const& delta) {
    auto exact = check_exact(phi, psi);
    if (!exact || !phi.is_injective()) {
      fail(ErrorKind::precondition_failed, "split_by_section: the sequence must be exact with phi injective");
    }
    if (!(delta.source() == psi.target()) || !(delta.target() == psi.source())) {
      fail(ErrorKind::precondition_failed, "split_by_section: delta does not go from P to N");
    }
    for (Elem p = 0; p < psi.target().order(); ++p) {
      if (psi(delta(p)) != p) {
        fail(ErrorKind::precondition_failed, "split_by_section: delta is not a section of psi", {p});
      }
    }
    Elem              e   = exact->basepoint;
    auto              inv = partial_inverse(phi);
    TModule const&    m   = phi.source();
    TModule const&    n   = phi.target();
    FiniteHeap const& h   = n.heap();
    Elem              e1  = inv[delta(e)];
    if (e1 == m.order()) {
      obligation_failed("split_by_section: delta(e) is not in Im phi", {e});
    }
    return step("split_by_section", [&] {
      ProductModule     prod = product_module(induced_module(m, e1), psi.target());
      std::vector<Elem> images(n.order());
      for (Elem x = 0; x < n.order(); ++x) {
        Elem k = inv[h.bracket(x, delta(psi(x)), delta(e))];
        if (k == m.order()) {
          obligation_failed("split_by_section: [n, delta psi(n), delta(e)] is not in Im phi", {x});
        }
        images[x] = pair_index(k, psi(x), psi.target().order());
      }
      ModuleMorphism iso(n, prod.module, std::move(images));
      if (!iso.is_injective() || !iso.is_surjective()) {
        obligation_failed("split_by_section: the splitting map is not bijective");
      }
      return SectionSplit{e1, prod, iso};
    });
  }

  RetractionSplit split_by_retraction(ModuleMorphism const& phi, ModuleMorphism const& psi, ModuleMorphism const& gamma) {
    auto exact = check_exact(phi, psi);
    if (!exact || !psi.is_surjective()) {
      fail(ErrorKind::precondition_failed, "split_by_retraction: the sequence must be exact with psi surjective");
    }
    if (!(gamma.source() == phi.target()) || !(gamma.target() == phi.source())) {
      fail(ErrorKind::precondition_failed, "split_by_retraction: gamma does not go from N to M");
    }
    for (Elem x = 0; x < phi.source().order(); ++x) {
      if (gamma(phi(x)) != x) {
        fail(ErrorKind::precondition_failed, "split_by_retraction: gamma is not a retraction of phi", {x});
      }
    }
    return step("split_by_retraction", [&] {
      TModule const&    n    = phi.target();
      ProductModule     prod = product_module(phi.source(), psi.target());
      std::vector<Elem> images(n.order());
      for (Elem x = 0; x < n.order(); ++x) {
        images[x] = pair_index(gamma(x), psi(x), psi.target().order());
      }
      ModuleMorphism iso(n, prod.module, std::move(images));
      if (!iso.is_injective() || !iso.is_surjective()) {
        obligation_failed("split_by_retraction: the splitting map is not bijective");
      }
      return RetractionSplit{prod, iso};
    });
  }

  ProjectivityVerdict is_projective_rel(TModule const& p, Universe const& universe) {
    if (!(p.truss() == universe.truss)) {
      fail(ErrorKind::mixed_truss, "is_projective_rel: module and universe are over different trusses");
    }
    auto const& mods = universe.modules;
    std::size_t k    = mods.size();
    std::vector<std::vector<ModuleMorphism>> maps_into(k);
    parallel_for(k, [&](std::size_t n) { maps_into[n] = enumerate_homs(p, mods[n]); });

    std::vector<ProjectivityVerdict> verdicts(k * k);
    parallel_for(k * k, [&](std::size_t idx) {
      std::size_t n = idx / k;
      std::size_t m = idx % k;
      for (auto const& pi : enumerate_homs(mods[m], mods[n])) {
        if (!pi.is_surjective()) {
          continue;
        }
        for (auto const& f : maps_into[n]) {
          if (!exists_hom(p, mods[m], [&](Elem x, Elem y) { return pi(y) == f(x); })) {
            verdicts[idx] = ProjectivityVerdict{false, pi, f};
            return;
          }
        }
      }
    });
    for (auto& v : verdicts) {
      if (!v.holds) {
        return v;
      }
    }
    return {};
  }

  InjectivityVerdict is_injective_rel(TModule const& e, Universe const& universe) {
    if (!(e.truss() == universe.truss)) {
      fail(ErrorKind::mixed_truss, "is_injective_rel: module and universe are over different trusses");
    }
    auto const&                     mods = universe.modules;
    std::vector<InjectivityVerdict> verdicts(mods.size());
    parallel_for(mods.size(), [&](std::size_t idx) {
      TModule const& n = mods[idx];
      // The empty submodule: some map N -> E must exist.
      if (!exists_hom(n, e, {})) {
        verdicts[idx] = InjectivityVerdict{false, n, {}, std::vector<Elem>{}};
        return;
      }
      std::size_t size = n.order();
      for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << size); ++mask) {
        std::vector<Elem> subset;
        for (Elem x = 0; x < size; ++x) {
          if (mask >> x & 1) {
            subset.push_back(x);
          }
        }
        std::optional<Submodule> sub;
        try {
          sub = submodule_check(n, subset);
        } catch (Error const&) {
          continue;
        }
        auto [sub_module, inclusion] = submodule_as_module(*sub);
        std::vector<Elem> position(size, size);
        for (Elem i = 0; i < subset.size(); ++i) {
          position[subset[i]] = i;
        }
        for (auto const& phi : enumerate_homs(sub_module, e)) {
          bool extends = exists_hom(n, e, [&](Elem x, Elem y) { return position[x] == size || phi(position[x]) == y; });
          if (!extends) {
            verdicts[idx] = InjectivityVerdict{
                false, n, subset, std::vector<Elem>(phi.images().begin(), phi.images().end())};
            return;
          }
        }
      }
    });
    for (auto& v : verdicts) {
      if (!v.holds) {
        return v;
      }
    }
    return {};
  }

  Divisibility is_divisible(TModule const& module) {
    Truss const& t = module.truss();
    if (!is_domain_truss(t)) {
      fail(ErrorKind::not_domain_truss, "is_divisible: the truss is not a domain truss");
    }
    for (Elem s = 0; s < t.order(); ++s) {
      if (s == *t.zero()) {
        continue;
      }
      std::vector<bool> hit(module.order(), false);
      for (Elem m = 0; m < module.order(); ++m) {
        hit[module.act(s, m)] = true;
      }
      for (Elem m = 0; m < module.order(); ++m) {
        if (!hit[m]) {
          return Divisibility{false, std::pair<Elem, Elem>{s, m}};
        }
      }
    }
    return {};
  }

  ProjectiveSchanuel schanuel_projective(Resolution const& first, Resolution const& second, Universe const* universe) {
    auto s1 = check_short_exact(first.i, first.pi);
    auto s2 = check_short_exact(second.i, second.pi);
    if (!s1 || !s2) {
      fail(ErrorKind::precondition_failed, std::string("schanuel_projective: ") + (s1 ? "second" : "first") + " sequence is not short exact");
    }
    if (!(first.pi.target() == second.pi.target())) {
      fail(ErrorKind::precondition_failed, "schanuel_projective: the sequences end in different modules");
    }
    if (s1->basepoint != s2->basepoint) {
      fail(ErrorKind::precondition_failed, "schanuel_projective: the exactness basepoints differ", {s1->basepoint, s2->basepoint});
    }
    TModule const& k  = first.i.source();
    TModule const& p  = first.i.target();
    TModule const& k2 = second.i.source();
    TModule const& p2 = second.i.target();
    auto           abs_k2 = absorbers(k2);
    if (abs_k2.empty()) {
      fail(ErrorKind::precondition_failed, "schanuel_projective: Abs(K') is empty");
    }
    if (universe) {
      if (!is_projective_rel(p, *universe).holds) {
        fail(ErrorKind::precondition_failed, "schanuel_projective: P is not projective relative to the universe");
      }
      if (!is_projective_rel(p2, *universe).holds) {
        fail(ErrorKind::precondition_failed, "schanuel_projective: P' is not projective relative to the universe");
      }
    }
    ModuleMorphism const& i   = first.i;
    ModuleMorphism const& pi  = first.pi;
    ModuleMorphism const& i2  = second.i;
    ModuleMorphism const& pi2 = second.pi;

    auto beta = least_hom(p, p2, [&](Elem x, Elem y) { return pi2(y) == pi(x); });
    if (!beta) {
      fail(ErrorKind::precondition_failed, "schanuel_projective: no lift beta of pi along pi'");
    }

    return step("schanuel_projective", [&] {
      auto              inv2 = partial_inverse(i2);
      std::vector<Elem> alpha_images(k.order());
      for (Elem x = 0; x < k.order(); ++x) {
        alpha_images[x] = inv2[(*beta)(i(x))];
        if (alpha_images[x] == k2.order()) {
          obligation_failed("schanuel_projective: beta(i(k)) is not in Im i'", {x});
        }
      }
      ModuleMorphism alpha(k, k2, std::move(alpha_images));

      Elem              e2  = abs_k2[0];
      ProductModule     pk2 = product_module(p, k2);
      std::vector<Elem> theta_images(k.order());
      for (Elem x = 0; x < k.order(); ++x) {
        theta_images[x] = pair_index(i(x), alpha(x), k2.order());
      }
      ModuleMorphism theta(k, pk2.module, std::move(theta_images));
      if (!theta.is_injective()) {
        obligation_failed("schanuel_projective: theta is not injective");
      }

      std::vector<Elem> psi_images(pk2.module.order());
      for (Elem x = 0; x < pk2.module.order(); ++x) {
        psi_images[x] = p2.heap().bracket((*beta)(x / k2.order()), i2(x % k2.order()), i2(e2));
      }
      ModuleMorphism psi(pk2.module, p2, std::move(psi_images));
      if (!psi.is_surjective()) {
        obligation_failed("schanuel_projective: psi is not surjective");
      }
      auto exact = check_exact(theta, psi);
      if (!exact || exact->basepoint != i2(e2)) {
        obligation_failed("schanuel_projective: Im theta != ker psi at i'(e')");
      }

      auto gamma = find_section(psi);
      if (!gamma) {
        fail(ErrorKind::precondition_failed, "schanuel_projective: psi admits no section");
      }
      SectionSplit split = split_by_section(theta, psi, *gamma);

      // K^(e) x P' -> P x K' -> K' x P.
      ModuleMorphism    back = inverse(split.iso);
      ProductModule     k2p  = product_module(k2, p);
      std::vector<Elem> iso_images(back.source().order());
      for (Elem x = 0; x < iso_images.size(); ++x) {
        Elem y        = back(x);
        iso_images[x] = pair_index(y % k2.order(), y / k2.order(), p.order());
      }
      ModuleMorphism iso(split.product.module, k2p.module, std::move(iso_images));
      if (!iso.is_injective() || !iso.is_surjective()) {
        obligation_failed("schanuel_projective: assembled map is not bijective");
      }
      bool oracle = find_isomorphism(split.product.module, k2p.module).has_value();
      return ProjectiveSchanuel{*s1, *s2, *beta, alpha, e2, theta, psi, *gamma, split, split.basepoint, iso, oracle};
    });
  }

  InjectiveSchanuel schanuel_injective(Coresolution const& first, Coresolution const& second, Universe const* universe) {
    auto s1 = check_short_exact(first.i, first.pi);
    auto s2 = check_short_exact(second.i, second.pi);
    if (!s1 || !s2) {
      fail(ErrorKind::precondition_failed, std::string("schanuel_injective: ") + (s1 ? "second" : "first") + " sequence is not short exact");
    }
    if (!(first.i.source() == second.i.source())) {
      fail(ErrorKind::precondition_failed, "schanuel_injective: the sequences start at different modules");
    }
    ModuleMorphism const& i   = first.i;
    ModuleMorphism const& pi  = first.pi;
    ModuleMorphism const& i2  = second.i;
    ModuleMorphism const& pi2 = second.pi;
    TModule const&        e   = i.target();
    TModule const&        q   = pi.target();
    TModule const&        e2  = i2.target();
    TModule const&        q2  = pi2.target();
    auto                  abs_q2 = absorbers(q2);
    if (abs_q2.empty()) {
      fail(ErrorKind::precondition_failed, "schanuel_injective: Abs(Q') is empty");
    }
    if (universe) {
      if (!is_injective_rel(e, *universe).holds) {
        fail(ErrorKind::precondition_failed, "schanuel_injective: E is not injective relative to the universe");
      }
      if (!is_injective_rel(e2, *universe).holds) {
        fail(ErrorKind::precondition_failed, "schanuel_injective: E' is not injective relative to the universe");
      }
    }

    auto inv2  = partial_inverse(i2);
    Elem out2  = i2.source().order();
    auto alpha = least_hom(e2, e, [&](Elem x, Elem y) { return inv2[x] == out2 || i(inv2[x]) == y; });
    if (!alpha) {
      fail(ErrorKind::precondition_failed, "schanuel_injective: no extension alpha of i along i'");
    }

    return step("schanuel_injective", [&] {
      std::vector<Elem> beta_images(q2.order(), q.order());
      for (Elem x = 0; x < e2.order(); ++x) {
        Elem v = pi((*alpha)(x));
        Elem& slot = beta_images[pi2(x)];
        if (slot != q.order() && slot != v) {
          obligation_failed("schanuel_injective: beta is not well defined", {x});
        }
        slot = v;
      }
      ModuleMorphism beta(q2, q, std::move(beta_images));

      Elem              a   = abs_q2[0];
      ProductModule     eq2 = product_module(e, q2);
      std::vector<Elem> theta_images(e2.order());
      for (Elem x = 0; x < e2.order(); ++x) {
        theta_images[x] = pair_index((*alpha)(x), pi2(x), q2.order());
      }
      ModuleMorphism theta(e2, eq2.module, std::move(theta_images));
      if (!theta.is_injective()) {
        obligation_failed("schanuel_injective: theta is not injective");
      }

      std::vector<Elem> psi_images(eq2.module.order());
      for (Elem x = 0; x < eq2.module.order(); ++x) {
        psi_images[x] = q.heap().bracket(pi(x / q2.order()), beta(x % q2.order()), beta(a));
      }
      ModuleMorphism psi(eq2.module, q, std::move(psi_images));
      if (!psi.is_surjective()) {
        obligation_failed("schanuel_injective: psi is not surjective");
      }
      auto exact = check_exact(theta, psi);
      if (!exact || exact->basepoint != beta(a)) {
        obligation_failed("schanuel_injective: Im theta != ker psi at beta(e)");
      }

      auto gamma = find_retraction(theta);
      if (!gamma) {
        fail(ErrorKind::precondition_failed, "schanuel_injective: theta admits no retraction");
      }
      RetractionSplit split  = split_by_retraction(theta, psi, *gamma);
      bool            oracle = find_isomorphism(eq2.module, split.product.module).has_value();

      InjectiveSchanuel result{*s1, *s2, *alpha, beta, a, theta, psi, *gamma, split, oracle, {}, {}};
      if (universe) {
        result.q_injective       = is_injective_rel(q, *universe).holds;
        result.q_prime_injective = is_injective_rel(q2, *universe).holds;
      }
      return result;
    });
  }

}  // namespace trusslab

#include "commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace trusslab::cli {

  namespace {

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        fail(ErrorKind::parse, "cannot read '" + path + "'");
      }
      std::ostringstream text;
      text << in.rdbuf();
      return text.str();
    }

    std::string list(std::span<Elem const> xs) {
      std::string s;
      for (Elem x : xs) {
        s += (s.empty() ? "" : " ") + std::to_string(x);
      }
      return s.empty() ? "(none)" : s;
    }

    std::string yes(bool b) {
      return b ? "yes" : "no";
    }

    // Writes "# ..." comment lines and then the collected blocks.
    class Output {
     public:
      explicit Output(std::ostream& out) : _out(out) {}

      void note(std::string const& s) {
        _out << "# " << s << '\n';
      }
      void add(Definition def) {
        _doc.definitions.push_back(std::move(def));
      }
      void module(TModule const& m, std::string const& name, std::string const& truss) {
        add(to_def(m, name, truss));
      }
      template <typename Structure>
      void map(Morphism<Structure> const& f, std::string const& name, std::string const& source, std::string const& target) {
        add(to_def(f.images(), name, source, target));
      }
      ~Output() {
        if (!_doc.definitions.empty()) {
          _out << serialize(_doc);
        }
      }

     private:
      std::ostream& _out;
      Document      _doc;
    };

    FiniteHeap const& heap_of_object(AnyObject const& obj) {
      return std::visit([](auto const& o) -> FiniteHeap const& { return heap_of(o); }, obj);
    }

    std::string kind_of(AnyObject const& obj) {
      if (std::holds_alternative<FiniteHeap>(obj)) {
        return "heap";
      }
      return std::holds_alternative<Truss>(obj) ? "truss" : "module";
    }

    ModuleMorphism const& module_map(Session& s, std::string const& name) {
      auto const* f = std::get_if<ModuleMorphism>(&s.ws.map(name));
      if (!f) {
        fail(ErrorKind::resolve, "'" + name + "' is not a module map");
      }
      return *f;
    }

    // The name a map block gives its source and target.
    MapDef const& map_def(Session& s, std::string const& name) {
      for (auto const& d : s.doc.definitions) {
        if (auto const* m = std::get_if<MapDef>(&d); m && m->name == name) {
          return *m;
        }
      }
      fail(ErrorKind::resolve, "undefined map '" + name + "'");
    }

    std::pair<std::string, std::string> split_seq(std::string const& seq) {
      auto comma = seq.find(',');
      if (comma == std::string::npos) {
        fail(ErrorKind::parse, "sequence '" + seq + "' must be two map names separated by a comma");
      }
      return {seq.substr(0, comma), seq.substr(comma + 1)};
    }

    Truss census_truss(std::string const& label) {
      for (auto const& t : truss_census(4)) {
        if (t.label() == label) {
          return t;
        }
      }
      fail(ErrorKind::resolve, "undefined truss '" + label + "' (neither in the input nor a census label T<n>.<k>)");
    }

  }  // namespace

  Session load(std::vector<std::string> const& files, std::ostream& out) {
    Session s;
    s.out = &out;
    for (auto const& f : files) {
      Document d = parse(read_file(f), s.doc);
      s.doc.definitions.insert(s.doc.definitions.end(), d.definitions.begin(), d.definitions.end());
    }
    s.ws = Workspace(s.doc);
    return s;
  }

  int validate(Session& s, std::string const& file) {
    // References may point into the files loaded with -f.
    Document own = parse(read_file(file), s.doc);
    Document all = s.doc;
    all.definitions.insert(all.definitions.end(), own.definitions.begin(), own.definitions.end());
    Workspace ws(all);
    Output    out(*s.out);
    for (auto const& d : own.definitions) {
      std::string const& name = name_of(d);
      if (ws.is_map(name)) {
        out.note("map " + name + ": ok");
      } else {
        auto const& obj = ws.object(name);
        out.note(kind_of(obj) + " " + name + ": ok, order " + std::to_string(heap_of_object(obj).order()));
      }
    }
    out.note(std::to_string(own.definitions.size()) + " definitions valid");
    return holds;
  }

  int hom(Session& s, std::string const& a, std::string const& b, std::string const& kind) {
    AnyObject const& x = s.ws.object(a);
    AnyObject const& y = s.ws.object(b);
    std::string      k = kind;
    if (k.empty() || k == "auto") {
      k = kind_of(x) == kind_of(y) ? kind_of(x) : "heap";
    }
    std::vector<std::vector<Elem>> maps;
    if (k == "module") {
      for (auto const& f : enumerate_homs(s.ws.module(a), s.ws.module(b))) {
        maps.emplace_back(f.images().begin(), f.images().end());
      }
    } else if (k == "truss") {
      for (auto const& f : enumerate_homs(s.ws.truss(a), s.ws.truss(b))) {
        maps.emplace_back(f.images().begin(), f.images().end());
      }
    } else if (k == "heap") {
      for (auto const& f : enumerate_homs(heap_of_object(x), heap_of_object(y))) {
        maps.emplace_back(f.images().begin(), f.images().end());
      }
    } else {
      fail(ErrorKind::parse, "unknown kind '" + kind + "' (heap, truss or module)");
    }
    Output out(*s.out);
    out.note(std::to_string(maps.size()) + " " + k + " morphisms " + a + " -> " + b);
    if (k == "heap" && kind_of(x) != "heap") {
      out.note("heap maps between the underlying heaps; the blocks below name the structures");
    }
    for (std::size_t i = 0; i < maps.size(); ++i) {
      out.add(to_def(maps[i], "hom" + std::to_string(i), a, b));
    }
    return holds;
  }

  int iso(Session& s, std::string const& a, std::string const& b) {
    AnyObject const& x = s.ws.object(a);
    AnyObject const& y = s.ws.object(b);
    if (kind_of(x) != kind_of(y)) {
      fail(ErrorKind::resolve, "'" + a + "' and '" + b + "' are of different kinds");
    }
    std::optional<std::vector<Elem>> found;
    if (auto const* h = std::get_if<FiniteHeap>(&x)) {
      if (auto f = find_isomorphism(*h, std::get<FiniteHeap>(y))) {
        found.emplace(f->images().begin(), f->images().end());
      }
    } else if (auto const* t = std::get_if<Truss>(&x)) {
      if (auto f = find_isomorphism(*t, std::get<Truss>(y))) {
        found.emplace(f->images().begin(), f->images().end());
      }
    } else if (auto f = find_isomorphism(std::get<TModule>(x), std::get<TModule>(y))) {
      found.emplace(f->images().begin(), f->images().end());
    }
    Output out(*s.out);
    if (!found) {
      FiniteHeap const& hx = heap_of_object(x);
      FiniteHeap const& hy = heap_of_object(y);
      out.note(a + " and " + b + " are not isomorphic");
      out.note("orders " + std::to_string(hx.order()) + " and " + std::to_string(hy.order()) + "; element orders "
               + list(hx.group_type()) + " and " + list(hy.group_type()));
      return fails;
    }
    out.note(a + " and " + b + " are isomorphic");
    out.add(to_def(*found, "iso", a, b));
    return holds;
  }

  int kernel(Session& s, std::string const& map, Elem at) {
    SubHeap     ker;
    std::string source = map_def(s, map).source;
    std::visit(
        [&](auto const& f) {
          using F = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<F, ModuleMorphism>) {
            ker = kernel_at(f, at);
          } else if constexpr (std::is_same_v<F, HeapMorphism>) {
            ker = kernel_at(f, at);
          } else {
            ker = kernel_at(HeapMorphism(f.source().heap(), f.target().heap(), std::vector<Elem>(f.images().begin(), f.images().end())), at);
          }
        },
        s.ws.map(map));
    Output out(*s.out);
    out.note("ker_" + std::to_string(at) + " " + map + " = { " + list(ker.elements) + " } in " + source);
    out.add(to_def(subheap_as_heap(ker).first, map + ".ker"));
    return holds;
  }

  int quotient(Session& s, std::string const& module, std::string const& sub) {
    TModule const&    m = s.ws.module(module);
    std::vector<Elem> elems;
    if (s.ws.is_map(sub)) {
      ModuleMorphism const& f = module_map(s, sub);
      if (!(f.target() == m)) {
        fail(ErrorKind::resolve, "'" + sub + "' does not map into '" + module + "'");
      }
      elems = f.image();
    } else {
      // A module name stands for its first embedding.
      TModule const&                n = s.ws.module(sub);
      std::optional<ModuleMorphism> mono;
      for (auto const& f : enumerate_homs(n, m)) {
        if (f.is_injective()) {
          mono = f;
          break;
        }
      }
      if (!mono) {
        fail(ErrorKind::precondition_failed, "'" + sub + "' does not embed in '" + module + "'");
      }
      elems = mono->image();
    }
    auto [q, proj] = quotient_module(submodule_check(m, elems));
    Output out(*s.out);
    std::string name = module + ".quot";
    out.note(module + " / { " + list(elems) + " } has order " + std::to_string(q.order()));
    out.module(q, name, s.ws.truss_name_of(module));
    out.map(proj, name + ".proj", module, name);
    return holds;
  }

  int product(Session& s, std::string const& a, std::string const& b) {
    ProductModule p     = product_module(s.ws.module(a), s.ws.module(b));
    std::string   name  = a + "_x_" + b;
    std::string   truss = s.ws.truss_name_of(a);
    Output        out(*s.out);
    out.note("(m, n) is element m * " + std::to_string(s.ws.module(b).order()) + " + n");
    out.module(p.module, name, truss);
    out.map(p.pi1, name + ".pi1", name, a);
    out.map(p.pi2, name + ".pi2", name, b);
    if (p.eps1) {
      out.map(*p.eps1, name + ".eps1", a, name);
    }
    if (p.eps2) {
      out.map(*p.eps2, name + ".eps2", b, name);
    }
    return holds;
  }

  int power(Session& s, std::string const& m, std::size_t k) {
    TModule p = power_module(s.ws.module(m), k);
    Output  out(*s.out);
    out.note("a function f is the base-" + std::to_string(s.ws.module(m).order()) + " number f(0) f(1) ... f(k-1)");
    out.module(p, m + ".pow" + std::to_string(k), s.ws.truss_name_of(m));
    return holds;
  }

  int induce(Session& s, std::string const& m, Elem at) {
    TModule p = induced_module(s.ws.module(m), at);
    Output  out(*s.out);
    out.note("t ._e m = [t.m, t.e, e] with e = " + std::to_string(at));
    out.module(p, m + ".at" + std::to_string(at), s.ws.truss_name_of(m));
    return holds;
  }

  int check_exact(Session& s, std::string const& f, std::string const& g) {
    ModuleMorphism const& a = module_map(s, f);
    ModuleMorphism const& b = module_map(s, g);
    auto                  w = trusslab::check_exact(a, b);
    Output                out(*s.out);
    if (!w) {
      out.note("not exact: Im " + f + " = { " + list(a.image()) + " } is no fibre of " + g);
      for (Elem y : b.image()) {
        out.note("fibre over " + std::to_string(y) + ": { " + list(b.preimage(y)) + " }");
      }
      return fails;
    }
    out.note("exact: Im " + f + " = ker_" + std::to_string(w->basepoint) + " " + g + ", Abs-exact " + yes(w->abs_exact));
    return holds;
  }

  int check_short_exact(Session& s, std::string const& i, std::string const& pi) {
    ModuleMorphism const& a = module_map(s, i);
    ModuleMorphism const& b = module_map(s, pi);
    auto                  w = trusslab::check_short_exact(a, b);
    Output                out(*s.out);
    if (!w) {
      out.note("not short exact: " + i + " injective " + yes(a.is_injective()) + ", " + pi + " surjective "
               + yes(b.is_surjective()) + ", exact " + yes(trusslab::check_exact(a, b).has_value()));
      return fails;
    }
    std::string n     = map_def(s, i).target;
    std::string p     = map_def(s, pi).target;
    std::string truss = s.ws.truss_name_of(n);
    std::string q     = n + ".quot";
    out.note("short exact at basepoint " + std::to_string(w->basepoint) + "; " + n + " / Im " + i + " is isomorphic to " + p);
    out.module(w->quotient, q, truss);
    out.map(w->projection, q + ".proj", n, q);
    out.map(w->iso, q + ".iso", q, p);
    return holds;
  }

  int check_injective(Session& s, std::string const& e, std::size_t universe_max) {
    TModule const& m = s.ws.module(e);
    Universe       u = build_universe(m.truss(), universe_max);
    auto           v = is_injective_rel(m, u);
    Output         out(*s.out);
    if (v.holds) {
      out.note(e + " is injective relative to all " + std::to_string(u.modules.size()) + " modules of order <= "
               + std::to_string(universe_max));
      return holds;
    }
    std::string truss = s.ws.truss_name_of(e);
    out.module(*v.module, "N", truss);
    if (v.submodule.empty()) {
      out.note("not injective: there is no map N -> " + e);
      return fails;
    }
    out.note("not injective: the map N' -> " + e + " on N' = { " + list(v.submodule) + " } <= N has no extension to N");
    auto sub = submodule_as_module(submodule_check(*v.module, v.submodule));
    out.module(sub.first, "N'", truss);
    out.map(sub.second, "incl", "N'", "N");
    out.add(to_def(*v.map, "phi", "N'", e));
    return fails;
  }

  int check_projective(Session& s, std::string const& p, std::size_t universe_max) {
    TModule const& m = s.ws.module(p);
    Universe       u = build_universe(m.truss(), universe_max);
    auto           v = is_projective_rel(m, u);
    Output         out(*s.out);
    if (v.holds) {
      out.note(p + " is projective relative to all " + std::to_string(u.modules.size()) + " modules of order <= "
               + std::to_string(universe_max));
      return holds;
    }
    std::string truss = s.ws.truss_name_of(p);
    out.note("not projective: f : " + p + " -> N does not lift along the epimorphism pi : M -> N");
    out.module(v.epi->source(), "M", truss);
    out.module(v.epi->target(), "N", truss);
    out.map(*v.epi, "pi", "M", "N");
    out.map(*v.map, "f", p, "N");
    return fails;
  }

  int check_divisible(Session& s, std::string const& m) {
    auto   v = is_divisible(s.ws.module(m));
    Output out(*s.out);
    if (v.holds) {
      out.note(m + " is divisible");
      return holds;
    }
    out.note("not divisible: " + std::to_string(v.witness->second) + " is not in " + std::to_string(v.witness->first) + "." + m);
    return fails;
  }

  int schanuel(Session& s, bool projective, std::string const& seq1, std::string const& seq2, std::size_t universe_max) {
    auto [i1, p1] = split_seq(seq1);
    auto [i2, p2] = split_seq(seq2);
    ModuleMorphism const& a = module_map(s, i1);
    ModuleMorphism const& b = module_map(s, p1);
    ModuleMorphism const& c = module_map(s, i2);
    ModuleMorphism const& d = module_map(s, p2);
    std::string           truss = s.ws.truss_name_of(map_def(s, i1).source);
    std::optional<Universe> u;
    if (universe_max > 0) {
      u = build_universe(a.source().truss(), universe_max);
    }
    Universe const* up = u ? &*u : nullptr;
    try {
      Output out(*s.out);
      if (projective) {
        auto r = schanuel_projective(Resolution{a, b}, Resolution{c, d}, up);
        out.note("K^(e) x P' is isomorphic to K' x P with e = " + std::to_string(r.basepoint) + " and e' = "
                 + std::to_string(r.k_absorber) + "; independent search agrees: " + yes(r.oracle_agrees));
        out.module(r.iso.source(), "lhs", truss);
        out.module(r.iso.target(), "rhs", truss);
        out.map(r.iso, "iso", "lhs", "rhs");
      } else {
        auto r = schanuel_injective(Coresolution{a, b}, Coresolution{c, d}, up);
        out.note("E x Q' is isomorphic to E' x Q with e = " + std::to_string(r.q_absorber) + "; independent search agrees: "
                 + yes(r.oracle_agrees));
        if (r.q_injective) {
          out.note("Q injective " + yes(*r.q_injective) + ", Q' injective " + yes(*r.q_prime_injective));
        }
        out.module(r.split.iso.source(), "lhs", truss);
        out.module(r.split.iso.target(), "rhs", truss);
        out.map(r.split.iso, "iso", "lhs", "rhs");
      }
    } catch (Error const& e) {
      if (e.kind() != ErrorKind::precondition_failed) {
        throw;
      }
      *s.out << "# hypotheses not met: " << e.detail() << '\n';
      return fails;
    }
    return holds;
  }

  int enumerate(Session& s, std::string const& what, std::size_t order, std::string const& truss) {
    Output out(*s.out);
    if (what == "heaps") {
      auto hs = enumerate_heaps(order);
      out.note(std::to_string(hs.size()) + " heaps of order " + std::to_string(order));
      for (auto const& h : hs) {
        out.add(to_def(h, h.label()));
      }
    } else if (what == "trusses") {
      auto ts = enumerate_trusses(order);
      out.note(std::to_string(ts.size()) + " trusses of order " + std::to_string(order));
      for (auto const& t : ts) {
        out.add(to_def(t, t.label()));
      }
    } else if (what == "modules") {
      if (truss.empty()) {
        fail(ErrorKind::parse, "enumerate modules needs --truss");
      }
      bool  known = s.ws.has(truss);
      Truss t     = known ? s.ws.truss(truss) : census_truss(truss);
      auto  ms    = enumerate_modules(t, order);
      out.note(std::to_string(ms.size()) + " modules of order " + std::to_string(order) + " over " + truss);
      if (!known) {
        out.add(to_def(t, truss));
      }
      for (auto const& m : ms) {
        out.module(m, m.label(), truss);
      }
    } else {
      fail(ErrorKind::parse, "unknown census '" + what + "' (heaps, trusses or modules)");
    }
    return holds;
  }

  int census(Session& s, std::size_t max_order) {
    std::ostream& out = *s.out;
    out << "# order heaps trusses with_zero commutative unital domain\n";
    for (std::size_t n = 1; n <= max_order; ++n) {
      auto        hs = enumerate_heaps(n);
      auto        ts = enumerate_trusses(n);
      std::size_t zero = 0, comm = 0, unital = 0, domain = 0;
      for (auto const& t : ts) {
        zero += t.zero().has_value();
        comm += t.is_commutative();
        unital += t.is_unital();
        domain += is_domain_truss(t);
      }
      out << n << ' ' << hs.size() << ' ' << ts.size() << ' ' << zero << ' ' << comm << ' ' << unital << ' ' << domain << '\n';
    }
    return holds;
  }

}  // namespace trusslab::cli

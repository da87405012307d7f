#include "trusslab/io.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace trusslab {

  namespace {

    struct Token {
      std::string text;
      std::size_t line   = 0;
      std::size_t column = 0;
    };

    using Line = std::vector<Token>;

    [[noreturn]] void parse_error(std::size_t line, std::size_t column, std::string const& message) {
      fail(ErrorKind::parse, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message,
           {line, column});
    }

    [[noreturn]] void parse_error(Token const& at, std::string const& message) {
      parse_error(at.line, at.column, message);
    }

    bool word_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'' || c == '*';
    }

    // Splits the text into non-empty lines of tokens.  Punctuation is "{",
    // "}", ":" and "->"; everything after '#' is a comment.
    std::vector<Line> tokenize(std::string_view text) {
      std::vector<Line> lines;
      std::size_t       line_no = 1;
      std::size_t       pos     = 0;
      while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
          end = text.size();
        }
        std::string_view raw = text.substr(pos, end - pos);
        Line             line;
        for (std::size_t i = 0; i < raw.size();) {
          char c = raw[i];
          if (c == '#') {
            break;
          }
          if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
          }
          std::size_t col = i + 1;
          if (c == '{' || c == '}' || c == ':') {
            line.push_back({std::string(1, c), line_no, col});
            ++i;
          } else if (c == '-' && i + 1 < raw.size() && raw[i + 1] == '>') {
            line.push_back({"->", line_no, col});
            i += 2;
          } else if (word_char(c)) {
            std::size_t j = i;
            while (j < raw.size() && word_char(raw[j])) {
              ++j;
            }
            line.push_back({std::string(raw.substr(i, j - i)), line_no, col});
            i = j;
          } else {
            parse_error(line_no, col, std::string("unexpected character '") + c + "'");
          }
        }
        if (!line.empty()) {
          lines.push_back(std::move(line));
        }
        ++line_no;
        pos = end + 1;
      }
      return lines;
    }

    bool is_number(Token const& t) {
      return !t.text.empty() && std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    }

    Elem number(Token const& t) {
      Elem value = 0;
      auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
      if (!is_number(t) || ec != std::errc() || ptr != t.text.data() + t.text.size()) {
        parse_error(t, "expected a non-negative integer, found '" + t.text + "'");
      }
      return value;
    }

    bool is_name(Token const& t) {
      return !t.text.empty() && word_char(t.text[0]) && !is_number(t);
    }

    class Parser {
     public:
      explicit Parser(std::string_view text) : _lines(tokenize(text)) {}

      // Blocks of an earlier document that references may name.
      void known(Document const& context) {
        for (Definition const& def : context.definitions) {
          std::string const& name = name_of(def);
          if (auto const* h = std::get_if<HeapDef>(&def)) {
            _kinds[name]  = "heap";
            _orders[name] = h->order;
          } else if (auto const* t = std::get_if<TrussDef>(&def)) {
            _kinds[name]  = "truss";
            _orders[name] = t->mul.rows();
          } else if (auto const* m = std::get_if<ModuleDef>(&def)) {
            _kinds[name]  = "module";
            _orders[name] = m->order;
          } else {
            _kinds[name]  = "map";
            _orders[name] = 0;
          }
        }
      }

      Document run() {
        Document doc;
        while (_pos < _lines.size()) {
          Line const& head = _lines[_pos];
          std::string kind = head[0].text;
          Definition  def;
          if (kind == "heap") {
            def = parse_heap();
          } else if (kind == "truss") {
            def = parse_truss();
          } else if (kind == "module") {
            def = parse_module();
          } else if (kind == "map") {
            def = parse_map();
          } else {
            parse_error(head[0], "expected 'heap', 'truss', 'module' or 'map', found '" + kind + "'");
          }
          doc.definitions.push_back(std::move(def));
        }
        return doc;
      }

     private:
      Line const& line() {
        if (_pos >= _lines.size()) {
          std::size_t last = _lines.empty() ? 1 : _lines.back()[0].line;
          parse_error(last + 1, 1, "unexpected end of input: missing '}'");
        }
        return _lines[_pos];
      }

      static void expect(Line const& l, std::size_t i, std::string const& text) {
        if (i >= l.size()) {
          Token const& last = l.back();
          parse_error(last.line, last.column + last.text.size(), "expected '" + text + "'");
        }
        if (l[i].text != text) {
          parse_error(l[i], "expected '" + text + "', found '" + l[i].text + "'");
        }
      }

      static void expect_end(Line const& l, std::size_t i) {
        if (i < l.size()) {
          parse_error(l[i], "unexpected '" + l[i].text + "'");
        }
      }

      static std::string name_at(Line const& l, std::size_t i) {
        if (i >= l.size()) {
          Token const& last = l.back();
          parse_error(last.line, last.column + last.text.size(), "expected a name");
        }
        if (!is_name(l[i]) || l[i].text == "{" || l[i].text == "}") {
          parse_error(l[i], "expected a name, found '" + l[i].text + "'");
        }
        return l[i].text;
      }

      void declare(Token const& at, std::string const& name, std::string const& kind, std::size_t order) {
        if (_kinds.count(name)) {
          parse_error(at, "duplicate definition of '" + name + "'");
        }
        _kinds[name]  = kind;
        _orders[name] = order;
      }

      std::string const& kind_of(Token const& at, std::string const& name) {
        auto it = _kinds.find(name);
        if (it == _kinds.end()) {
          fail(ErrorKind::resolve,
               "line " + std::to_string(at.line) + ", column " + std::to_string(at.column) + ": undefined reference '"
                   + name + "'",
               {at.line, at.column});
        }
        return it->second;
      }

      // "key:" at the start of the current line; returns the key token.
      Token const& key(Line const& l) {
        if (l.size() < 2 || l[1].text != ":" || !is_name(l[0])) {
          parse_error(l[0], "expected 'key:' but found '" + l[0].text + "'");
        }
        return l[0];
      }

      // Rows of integers on the lines following a "key:" line.
      Table table(Token const& at, std::size_t rows, std::size_t cols, std::string const& what) {
        std::vector<Elem> data;
        std::size_t       r = 0;
        while (_pos < _lines.size() && is_number(_lines[_pos][0])) {
          Line const& l = _lines[_pos];
          if (r == rows) {
            parse_error(l[0], what + " has more than " + std::to_string(rows) + " rows");
          }
          if (l.size() != cols) {
            std::size_t col = l.size() > cols ? l[cols].column : l.back().column + l.back().text.size();
            parse_error(l[0].line, col,
                        what + " row " + std::to_string(r) + " has " + std::to_string(l.size()) + " entries, expected "
                            + std::to_string(cols));
          }
          for (Token const& t : l) {
            data.push_back(number(t));
          }
          ++r;
          ++_pos;
        }
        if (r != rows) {
          parse_error(at, what + " has " + std::to_string(r) + " rows, expected " + std::to_string(rows));
        }
        return Table(rows, cols, std::move(data));
      }

      std::optional<Elem> optional_elem(Line const& l) {
        if (l.size() != 3) {
          parse_error(l[0], "expected '" + l[0].text + ": i' or '" + l[0].text + ": none'");
        }
        if (l[2].text == "none") {
          return std::nullopt;
        }
        return number(l[2]);
      }

      // order/group body shared by heaps and modules; stops before the
      // first other key.
      void order_and_group(std::size_t& order, Table& group, Token const& block) {
        bool have_order = false;
        bool have_group = false;
        while (true) {
          Line const& l = line();
          if (l[0].text == "}") {
            break;
          }
          Token const& k = key(l);
          if (k.text == "order" && !have_order) {
            if (l.size() != 3) {
              parse_error(k, "expected 'order: n'");
            }
            order = number(l[2]);
            if (order == 0) {
              parse_error(l[2], "order must be positive");
            }
            have_order = true;
            ++_pos;
          } else if (k.text == "group" && !have_group) {
            if (!have_order) {
              parse_error(k, "'group:' must follow 'order:'");
            }
            expect_end(l, 2);
            ++_pos;
            group      = table(k, order, order, "group table");
            have_group = true;
          } else {
            break;
          }
        }
        if (!have_order || !have_group) {
          parse_error(block, std::string("missing '") + (have_order ? "group" : "order") + ":'");
        }
      }

      void close_block() {
        Line const& l = line();
        expect(l, 0, "}");
        expect_end(l, 1);
        ++_pos;
      }

      HeapDef parse_heap() {
        Line const& h = line();
        HeapDef     def;
        def.name = name_at(h, 1);
        expect(h, 2, "{");
        expect_end(h, 3);
        ++_pos;
        order_and_group(def.order, def.group, h[0]);
        close_block();
        declare(h[1], def.name, "heap", def.order);
        return def;
      }

      TrussDef parse_truss() {
        Line const& h = line();
        TrussDef    def;
        def.name = name_at(h, 1);
        expect(h, 2, "{");
        expect_end(h, 3);
        ++_pos;
        std::size_t order      = 0;
        bool        have_heap  = false;
        bool        have_mul   = false;
        bool        have_unit  = false;
        bool        have_zero  = false;
        while (line()[0].text != "}") {
          Line const&  l = line();
          Token const& k = key(l);
          if (k.text == "heap" && !have_heap) {
            if (l.size() == 3 && l[2].text == "{") {
              ++_pos;
              HeapDef inl;
              order_and_group(inl.order, inl.group, k);
              close_block();
              order           = inl.order;
              def.inline_heap = std::move(inl);
            } else {
              if (l.size() != 3) {
                parse_error(k, "expected 'heap: NAME' or 'heap: {'");
              }
              def.heap_ref = name_at(l, 2);
              if (kind_of(l[2], def.heap_ref) != "heap") {
                fail(ErrorKind::resolve, "'" + def.heap_ref + "' is not a heap");
              }
              order = _orders[def.heap_ref];
              ++_pos;
            }
            have_heap = true;
          } else if (k.text == "mul" && !have_mul) {
            if (!have_heap) {
              parse_error(k, "'mul:' must follow 'heap:'");
            }
            expect_end(l, 2);
            ++_pos;
            def.mul  = table(k, order, order, "multiplication table");
            have_mul = true;
          } else if (k.text == "unit" && !have_unit) {
            def.unit  = optional_elem(l);
            have_unit = true;
            ++_pos;
          } else if (k.text == "zero" && !have_zero) {
            def.zero  = optional_elem(l);
            have_zero = true;
            ++_pos;
          } else {
            parse_error(k, "unexpected key '" + k.text + "' in truss block");
          }
        }
        if (!have_heap || !have_mul) {
          parse_error(h[0], std::string("missing '") + (have_heap ? "mul" : "heap") + ":' in truss block");
        }
        close_block();
        declare(h[1], def.name, "truss", order);
        return def;
      }

      ModuleDef parse_module() {
        Line const& h = line();
        ModuleDef   def;
        def.name = name_at(h, 1);
        expect(h, 2, "over");
        def.truss_ref = name_at(h, 3);
        expect(h, 4, "{");
        expect_end(h, 5);
        if (kind_of(h[3], def.truss_ref) != "truss") {
          fail(ErrorKind::resolve, "'" + def.truss_ref + "' is not a truss");
        }
        std::size_t truss_order = _orders[def.truss_ref];
        ++_pos;
        order_and_group(def.order, def.group, h[0]);
        Line const&  l = line();
        Token const& k = key(l);
        if (k.text != "action") {
          parse_error(k, "expected 'action:'");
        }
        expect_end(l, 2);
        ++_pos;
        def.action = table(k, truss_order, def.order, "action table");
        close_block();
        declare(h[1], def.name, "module", def.order);
        return def;
      }

      MapDef parse_map() {
        Line const& h = line();
        MapDef      def;
        def.name = name_at(h, 1);
        expect(h, 2, ":");
        def.source = name_at(h, 3);
        expect(h, 4, "->");
        def.target = name_at(h, 5);
        expect(h, 6, "{");
        expect_end(h, 7);
        std::string const& sk = kind_of(h[3], def.source);
        std::string const& tk = kind_of(h[5], def.target);
        if (sk == "map" || tk == "map" || sk != tk) {
          fail(ErrorKind::resolve, "map '" + def.name + "' must join two heaps, two trusses or two modules");
        }
        ++_pos;
        Line const&  l = line();
        Token const& k = key(l);
        if (k.text != "images") {
          parse_error(k, "expected 'images:'");
        }
        for (std::size_t i = 2; i < l.size(); ++i) {
          def.images.push_back(number(l[i]));
        }
        ++_pos;
        while (_pos < _lines.size() && is_number(_lines[_pos][0])) {
          for (Token const& t : _lines[_pos]) {
            def.images.push_back(number(t));
          }
          ++_pos;
        }
        if (def.images.size() != _orders[def.source]) {
          parse_error(k, "images has " + std::to_string(def.images.size()) + " entries, expected "
                             + std::to_string(_orders[def.source]));
        }
        close_block();
        declare(h[1], def.name, "map", 0);
        return def;
      }

      std::vector<Line>                  _lines;
      std::size_t                        _pos = 0;
      std::map<std::string, std::string> _kinds;
      std::map<std::string, std::size_t> _orders;
    };

    void write_table(std::ostringstream& out, Table const& t, std::string const& indent) {
      for (std::size_t r = 0; r < t.rows(); ++r) {
        out << indent;
        for (std::size_t c = 0; c < t.cols(); ++c) {
          out << (c ? " " : "") << t(r, c);
        }
        out << '\n';
      }
    }

    void write_order_group(std::ostringstream& out, std::size_t order, Table const& group, std::string const& indent) {
      out << indent << "order: " << order << '\n';
      out << indent << "group:\n";
      write_table(out, group, indent + "  ");
    }

    std::string opt_text(std::optional<Elem> x) {
      return x ? std::to_string(*x) : "none";
    }

    std::string rethrow_prefix(std::string const& name) {
      return "in '" + name + "': ";
    }

  }  // namespace

  std::string const& name_of(Definition const& def) {
    return std::visit([](auto const& d) -> std::string const& { return d.name; }, def);
  }

  Document parse(std::string_view text) {
    return Parser(text).run();
  }

  Document parse(std::string_view text, Document const& context) {
    Parser p(text);
    p.known(context);
    return p.run();
  }

  std::string serialize(Definition const& def) {
    std::ostringstream out;
    if (auto const* h = std::get_if<HeapDef>(&def)) {
      out << "heap " << h->name << " {\n";
      write_order_group(out, h->order, h->group, "  ");
      out << "}\n";
    } else if (auto const* t = std::get_if<TrussDef>(&def)) {
      out << "truss " << t->name << " {\n";
      if (t->inline_heap) {
        out << "  heap: {\n";
        write_order_group(out, t->inline_heap->order, t->inline_heap->group, "    ");
        out << "  }\n";
      } else {
        out << "  heap: " << t->heap_ref << '\n';
      }
      out << "  mul:\n";
      write_table(out, t->mul, "    ");
      out << "  unit: " << opt_text(t->unit) << '\n';
      out << "  zero: " << opt_text(t->zero) << '\n';
      out << "}\n";
    } else if (auto const* m = std::get_if<ModuleDef>(&def)) {
      out << "module " << m->name << " over " << m->truss_ref << " {\n";
      write_order_group(out, m->order, m->group, "  ");
      out << "  action:\n";
      write_table(out, m->action, "    ");
      out << "}\n";
    } else {
      auto const& f = std::get<MapDef>(def);
      out << "map " << f.name << " : " << f.source << " -> " << f.target << " {\n";
      out << "  images:";
      for (Elem x : f.images) {
        out << ' ' << x;
      }
      out << "\n}\n";
    }
    return out.str();
  }

  std::string serialize(Document const& doc) {
    std::string out;
    for (std::size_t i = 0; i < doc.definitions.size(); ++i) {
      out += (i ? "\n" : "") + serialize(doc.definitions[i]);
    }
    return out;
  }

  HeapDef to_def(FiniteHeap const& heap, std::string name) {
    return HeapDef{std::move(name), heap.order(), heap.retract()};
  }

  TrussDef to_def(Truss const& truss, std::string name) {
    TrussDef def;
    def.name        = std::move(name);
    def.inline_heap = to_def(truss.heap(), "");
    def.mul         = truss.mul_table();
    def.unit        = truss.unit();
    def.zero        = truss.zero();
    return def;
  }

  ModuleDef to_def(TModule const& module, std::string name, std::string truss_ref) {
    return ModuleDef{std::move(name), std::move(truss_ref), module.order(), module.heap().retract(), module.action()};
  }

  MapDef to_def(std::span<Elem const> images, std::string name, std::string source, std::string target) {
    return MapDef{std::move(name), std::move(source), std::move(target), std::vector<Elem>(images.begin(), images.end())};
  }

  Workspace::Workspace(Document const& doc) {
    for (Definition const& def : doc.definitions) {
      std::string const& name = name_of(def);
      if (has(name)) {
        fail(ErrorKind::resolve, "duplicate definition of '" + name + "'");
      }
      try {
        if (auto const* h = std::get_if<HeapDef>(&def)) {
          _objects.emplace(name, validate_heap(h->group, name));
        } else if (auto const* t = std::get_if<TrussDef>(&def)) {
          FiniteHeap heap = t->inline_heap ? validate_heap(t->inline_heap->group) : this->heap(t->heap_ref);
          _objects.emplace(name, validate_truss(heap, t->mul, t->unit, t->zero, name));
        } else if (auto const* m = std::get_if<ModuleDef>(&def)) {
          Truss const& tr = truss(m->truss_ref);
          _objects.emplace(name, validate_module(tr, validate_heap(m->group), m->action, name));
          _module_truss.emplace(name, m->truss_ref);
        } else {
          auto const& f   = std::get<MapDef>(def);
          AnyObject   src = object(f.source);
          AnyObject   dst = object(f.target);
          if (auto const* a = std::get_if<FiniteHeap>(&src)) {
            _maps.emplace(name, HeapMorphism(*a, std::get<FiniteHeap>(dst), f.images));
          } else if (auto const* a = std::get_if<Truss>(&src)) {
            _maps.emplace(name, TrussMorphism(*a, std::get<Truss>(dst), f.images));
          } else {
            _maps.emplace(name, ModuleMorphism(std::get<TModule>(src), std::get<TModule>(dst), f.images));
          }
        }
      } catch (Error const& e) {
        fail(e.kind(), rethrow_prefix(name) + e.detail(), e.witness());
      } catch (std::bad_variant_access const&) {
        fail(ErrorKind::resolve, rethrow_prefix(name) + "source and target are of different kinds");
      }
    }
  }

  bool Workspace::has(std::string const& name) const {
    return _objects.count(name) || _maps.count(name);
  }

  AnyObject const& Workspace::object(std::string const& name) const {
    auto it = _objects.find(name);
    if (it == _objects.end()) {
      fail(ErrorKind::resolve, "undefined structure '" + name + "'");
    }
    return it->second;
  }

  FiniteHeap const& Workspace::heap(std::string const& name) const {
    auto const* h = std::get_if<FiniteHeap>(&object(name));
    if (!h) {
      fail(ErrorKind::resolve, "'" + name + "' is not a heap");
    }
    return *h;
  }

  Truss const& Workspace::truss(std::string const& name) const {
    auto const* t = std::get_if<Truss>(&object(name));
    if (!t) {
      fail(ErrorKind::resolve, "'" + name + "' is not a truss");
    }
    return *t;
  }

  TModule const& Workspace::module(std::string const& name) const {
    auto const* m = std::get_if<TModule>(&object(name));
    if (!m) {
      fail(ErrorKind::resolve, "'" + name + "' is not a module");
    }
    return *m;
  }

  AnyMorphism const& Workspace::map(std::string const& name) const {
    auto it = _maps.find(name);
    if (it == _maps.end()) {
      fail(ErrorKind::resolve, "undefined map '" + name + "'");
    }
    return it->second;
  }

  bool Workspace::is_map(std::string const& name) const {
    return _maps.count(name) > 0;
  }

  std::string const& Workspace::truss_name_of(std::string const& module) const {
    auto it = _module_truss.find(module);
    if (it == _module_truss.end()) {
      fail(ErrorKind::resolve, "'" + module + "' is not a module");
    }
    return it->second;
  }

}  // namespace trusslab

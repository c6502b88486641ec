#include "hypernorm/value.hpp"

#include <cctype>
#include <ostream>
#include <variant>

#include "hypernorm/error.hpp"

namespace hypernorm {

  struct Value::Node {
    std::variant<std::string,
                 TaggedElem<Value>,
                 Dist<Value>,
                 Bag<Value>,
                 FinSet<Value>,
                 MultiDist<Value>,
                 FinAddProb<Value>>
        data;
  };

  namespace {
    std::string_view const kKindNames[] = {
        "atom", "tagged", "distribution", "multiset",
        "set",  "multidistribution", "finitely additive measure"};

    template <typename T>
    T const& get_as(Value const& v, T const* p, ValueKind want) {
      if (p == nullptr) {
        throw SignatureError("expected a " + std::string(kind_name(want))
                             + ", got the " + std::string(kind_name(v.kind()))
                             + " " + v.str());
      }
      return *p;
    }

    void write_weighted_map(std::string& out, Dist<Value> const& d) {
      out += '{';
      bool first = true;
      for (auto const& [x, m] : d) {
        if (!first) {
          out += ',';
        }
        first = false;
        out += x.str();
        out += ':';
        out += m.str();
      }
      out += '}';
    }
  }  // namespace

  std::string_view kind_name(ValueKind k) {
    return kKindNames[static_cast<std::size_t>(k)];
  }

  Value::Value(std::shared_ptr<Node const> node) : node_(std::move(node)) {}

  Value Value::atom(std::string name) {
    if (!is_atom_name(name)) {
      throw ParseError("invalid atom name \"" + name + "\"");
    }
    return Value(std::make_shared<Node const>(Node{std::move(name)}));
  }

  Value Value::tagged(std::size_t tag, Value inner) {
    if (tag == 0) {
      throw SignatureError("tags are 1-based");
    }
    return Value(std::make_shared<Node const>(
        Node{TaggedElem<Value>{tag, std::move(inner)}}));
  }

  Value Value::dist(Dist<Value> d) {
    return Value(std::make_shared<Node const>(Node{std::move(d)}));
  }

  Value Value::bag(Bag<Value> b) {
    return Value(std::make_shared<Node const>(Node{std::move(b)}));
  }

  Value Value::set(FinSet<Value> s) {
    return Value(std::make_shared<Node const>(Node{std::move(s)}));
  }

  Value Value::multidist(MultiDist<Value> m) {
    return Value(std::make_shared<Node const>(Node{std::move(m)}));
  }

  Value Value::finadd(FinAddProb<Value> e) {
    return Value(std::make_shared<Node const>(Node{std::move(e)}));
  }

  ValueKind Value::kind() const noexcept {
    return static_cast<ValueKind>(node_->data.index());
  }

  std::string const& Value::as_atom() const {
    return get_as(*this, std::get_if<std::string>(&node_->data),
                  ValueKind::atom);
  }
  TaggedElem<Value> const& Value::as_tagged() const {
    return get_as(*this, std::get_if<TaggedElem<Value>>(&node_->data),
                  ValueKind::tagged);
  }
  Dist<Value> const& Value::as_dist() const {
    return get_as(*this, std::get_if<Dist<Value>>(&node_->data),
                  ValueKind::dist);
  }
  Bag<Value> const& Value::as_bag() const {
    return get_as(*this, std::get_if<Bag<Value>>(&node_->data),
                  ValueKind::bag);
  }
  FinSet<Value> const& Value::as_set() const {
    return get_as(*this, std::get_if<FinSet<Value>>(&node_->data),
                  ValueKind::set);
  }
  MultiDist<Value> const& Value::as_multidist() const {
    return get_as(*this, std::get_if<MultiDist<Value>>(&node_->data),
                  ValueKind::multidist);
  }
  FinAddProb<Value> const& Value::as_finadd() const {
    return get_as(*this, std::get_if<FinAddProb<Value>>(&node_->data),
                  ValueKind::finadd);
  }

  bool operator==(Value const& a, Value const& b) {
    return a.node_ == b.node_ || a.node_->data == b.node_->data;
  }

  std::strong_ordering operator<=>(Value const& a, Value const& b) {
    if (a.node_ == b.node_) {
      return std::strong_ordering::equal;
    }
    return a.node_->data <=> b.node_->data;
  }

  std::string Value::str() const {
    std::string out;
    std::visit(
        overloaded{
            [&](std::string const& s) { out = s; },
            [&](TaggedElem<Value> const& t) {
              out = std::to_string(t.tag) + ":" + t.atom.str();
            },
            [&](Dist<Value> const& d) { write_weighted_map(out, d); },
            [&](FinAddProb<Value> const& e) {
              out = "E";
              write_weighted_map(
                  out, Dist<Value>(e.singleton_masses()));
            },
            [&](Bag<Value> const& b) {
              out = "<";
              bool first = true;
              for (auto const& x : b.elements()) {
                if (!first) {
                  out += ',';
                }
                first = false;
                out += x.str();
              }
              out += '>';
            },
            [&](FinSet<Value> const& s) {
              out = "[";
              bool first = true;
              for (auto const& x : s) {
                if (!first) {
                  out += ',';
                }
                first = false;
                out += x.str();
              }
              out += ']';
            },
            [&](MultiDist<Value> const& m) {
              out = "(";
              bool first = true;
              for (auto const& e : m) {
                if (!first) {
                  out += ',';
                }
                first = false;
                out += e.weight.str();
                out += '*';
                out += e.point.str();
              }
              out += ')';
            }},
        node_->data);
    return out;
  }

  std::ostream& operator<<(std::ostream& os, Value const& v) {
    return os << v.str();
  }

  bool is_atom_name(std::string_view name) {
    if (name.empty()) {
      return false;
    }
    auto head = static_cast<unsigned char>(name.front());
    if (!(std::isalpha(head) || head == '_' || head == '*')) {
      return false;
    }
    for (char c : name.substr(1)) {
      auto u = static_cast<unsigned char>(c);
      if (!(std::isalnum(u) || c == '_' || c == '.' || c == '*' || c == '\''
            || c == '-')) {
        return false;
      }
    }
    return true;
  }

  namespace {
    class TextParser {
     public:
      explicit TextParser(std::string_view text) : text_(text) {}

      Value parse_all() {
        Value v = parse();
        skip_ws();
        if (pos_ != text_.size()) {
          fail("unexpected trailing input");
        }
        return v;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(what + " at column " + std::to_string(pos_ + 1)
                         + " of \"" + std::string(text_) + "\"");
      }

      void skip_ws() {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
      }

      void expect(char c) {
        if (!peek(c)) {
          fail(std::string("expected '") + c + "'");
        }
        ++pos_;
      }

      std::string_view digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size()
               && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
        return text_.substr(start, pos_ - start);
      }

      Q01 weight() {
        skip_ws();
        std::size_t start = pos_;
        digits();
        if (pos_ < text_.size() && text_[pos_] == '/') {
          ++pos_;
          digits();
        }
        std::string_view tok = text_.substr(start, pos_ - start);
        if (tok.empty()) {
          fail("expected a rational weight");
        }
        try {
          return Q01::parse(tok);
        } catch (Error const& e) {
          pos_ = start;
          fail(e.what());
        }
      }

      // Parses `open item (, item)* close`, calling item() for each.
      template <typename Item>
      void sequence(char close, Item&& item) {
        if (peek(close)) {
          ++pos_;
          return;
        }
        while (true) {
          item();
          if (peek(',')) {
            ++pos_;
            continue;
          }
          expect(close);
          return;
        }
      }

      Dist<Value>::Map weighted_map() {
        Dist<Value>::Map out;
        sequence('}', [&] {
          std::size_t at = pos_;
          Value       x  = parse();
          expect(':');
          Q01 w = weight();
          if (!out.emplace(std::move(x), w).second) {
            pos_ = at;
            fail("duplicate key");
          }
        });
        return out;
      }

      template <typename T, typename Map>
      T checked(Map&& m, std::size_t at) {
        try {
          return T(std::forward<Map>(m));
        } catch (RangeError const& e) {
          pos_ = at;
          fail(e.what());
        }
      }

      Value parse() {
        skip_ws();
        if (pos_ >= text_.size()) {
          fail("unexpected end of input");
        }
        std::size_t at = pos_;
        char        c  = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
          std::string_view d = digits();
          expect(':');
          std::size_t tag = std::stoul(std::string(d));
          if (tag == 0) {
            pos_ = at;
            fail("tags are 1-based");
          }
          return Value::tagged(tag, parse());
        }
        if (c == 'E' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '{') {
          pos_ += 2;
          auto m = weighted_map();
          return Value::finadd(
              FinAddProb<Value>(checked<Dist<Value>>(std::move(m), at)));
        }
        if (c == '{') {
          ++pos_;
          auto m = weighted_map();
          return Value::dist(checked<Dist<Value>>(std::move(m), at));
        }
        if (c == '<') {
          ++pos_;
          Bag<Value> b;
          sequence('>', [&] { b.add(parse()); });
          return Value::bag(std::move(b));
        }
        if (c == '[') {
          ++pos_;
          FinSet<Value> s;
          sequence(']', [&] { s.insert(parse()); });
          return Value::set(std::move(s));
        }
        if (c == '(') {
          ++pos_;
          MultiDist<Value>::Entries es;
          sequence(')', [&] {
            Q01 w = weight();
            expect('*');
            es.push_back({w, parse()});
          });
          return Value::multidist(
              checked<MultiDist<Value>>(std::move(es), at));
        }
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
          char ch = text_[pos_];
          auto u  = static_cast<unsigned char>(ch);
          if (std::isalnum(u) || ch == '_' || ch == '.' || ch == '*'
              || ch == '\'' || ch == '-') {
            ++pos_;
          } else {
            break;
          }
        }
        std::string_view name = text_.substr(start, pos_ - start);
        if (!is_atom_name(name)) {
          pos_ = start;
          fail("expected a value");
        }
        return Value::atom(std::string(name));
      }

      std::string_view text_;
      std::size_t      pos_ = 0;
    };
  }  // namespace

  Value parse_value(std::string_view text) {
    return TextParser(text).parse_all();
  }

}  // namespace hypernorm

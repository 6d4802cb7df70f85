#include <cctype>

#include "ends/subset.hpp"

namespace ends {

namespace {

class SetParser {
 public:
  explicit SetParser(const std::string& text) : text_(text) {}

  SubsetPtr parse_all(const GroupPtr& g) {
    auto out = expr(g);
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError("cannot parse set expression '" + text_ + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string word() {
    skip();
    const auto start = pos_;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a keyword");
    return text_.substr(start, pos_ - start);
  }

  long integer() {
    skip();
    const auto start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stol(text_.substr(start, pos_ - start));
  }

  // Raw text up to the next top-level delimiter; parentheses (cycle
  // notation) and braces nest.
  std::string raw_until(const std::string& stops) {
    skip();
    const auto start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (depth == 0 && stops.find(c) != std::string::npos) break;
      if (c == '(' || c == '{') ++depth;
      if (c == ')' || c == '}') --depth;
      ++pos_;
    }
    auto s = text_.substr(start, pos_ - start);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    return s;
  }

  Element element(const GroupPtr& g, const std::string& stops) {
    const auto lit = raw_until(stops);
    if (lit.empty()) fail("expected an element");
    return g->parse(lit);
  }

  std::vector<Element> element_list(const GroupPtr& g) {
    expect('{');
    std::vector<Element> out;
    if (peek('}')) {
      ++pos_;
      return out;
    }
    while (true) {
      out.push_back(element(g, ",}"));
      if (peek(',')) {
        ++pos_;
        continue;
      }
      expect('}');
      return out;
    }
  }

  Subgroup subgroup(const GroupPtr& g) {
    const auto name = word();
    if (name == "whole") return Subgroup::whole(g);
    if (name == "trivial") return Subgroup::trivial(g);
    if (name == "factor") {
      expect('(');
      const long i = integer();
      expect(')');
      return Subgroup::factor(g, static_cast<int>(i - 1));
    }
    fail("unknown subgroup '" + name + "'");
  }

  SubsetPtr expr(const GroupPtr& g) {
    const auto name = word();
    if (name == "empty") return empty_set(g);
    if (name == "all") return whole_set(g);
    if (name == "finite") return finite_set(g, element_list(g));
    if (name == "cofinite") return cofinite_set(g, element_list(g));
    expect('(');
    SubsetPtr out;
    if (name == "cone") {
      out = suffix_cone(g, element(g, ")"));
    } else if (name == "coset") {
      auto h = subgroup(g);
      expect(';');
      out = coset_union(std::move(h), element_list(g));
    } else if (name == "suffix") {
      const auto h = subgroup(g);
      if (h.kind() != Subgroup::Kind::Factor) fail("suffix sets need factor(i)");
      expect(';');
      out = suffix_set(g, h.factor_index(), expr(h.marked()));
    } else if (name == "levels") {
      out = level_set(g, parse_natset(raw_until(")")));
    } else if (name == "lengths") {
      out = length_set(g, parse_natset(raw_until(")")));
    } else if (name == "halfspace") {
      std::vector<long> coefficients;
      if (peek('[')) {
        ++pos_;
        coefficients.push_back(integer());
        while (peek(',')) {
          ++pos_;
          coefficients.push_back(integer());
        }
        expect(']');
      } else {
        coefficients.push_back(integer());
      }
      expect(';');
      out = half_space(g, std::move(coefficients), integer());
    } else if (name == "lshift" || name == "rshift") {
      const auto x = element(g, ";");
      expect(';');
      auto base = expr(g);
      out = name == "lshift" ? left_translate(std::move(base), x) : right_translate(std::move(base), x);
    } else if (name == "union" || name == "inter") {
      std::vector<SubsetPtr> children{expr(g)};
      while (peek(',')) {
        ++pos_;
        children.push_back(expr(g));
      }
      out = name == "union" ? set_union(std::move(children)) : set_intersection(std::move(children));
    } else if (name == "not") {
      out = set_complement(expr(g));
    } else if (name == "xor") {
      auto a = expr(g);
      expect(',');
      out = set_xor(std::move(a), expr(g));
    } else if (name == "edit") {
      auto base = expr(g);
      std::vector<Element> added;
      std::vector<Element> removed;
      while (peek(';')) {
        ++pos_;
        skip();
        if (peek('+')) {
          ++pos_;
          added = element_list(g);
        } else if (peek('-')) {
          ++pos_;
          removed = element_list(g);
        } else {
          fail("expected '+{...}' or '-{...}'");
        }
      }
      out = edited(std::move(base), std::move(added), std::move(removed));
    } else {
      fail("unknown set constructor '" + name + "'");
    }
    expect(')');
    return out;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

SubsetPtr parse_set_expression(const GroupPtr& g, const std::string& text) { return SetParser(text).parse_all(g); }

}  // namespace ends

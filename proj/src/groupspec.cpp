#include "ends/groupspec.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <string>

#include "ends/errors.hpp"
#include "perm_table.hpp"

namespace ends {

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupPtr parse() {
    GroupPtr g = group();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError("group spec '" + std::string(text_) + "': " + why + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip();
    const auto start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    skip();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  GroupPtr group() {
    const std::string name = identifier();
    if (name == "free") return with_int(free_group);
    if (name == "cyclic") return with_int(cyclic_group);
    if (name == "sym") return with_int(symmetric_group);
    if (name == "free_abelian") return with_int(free_abelian_group);
    if (name == "free_product") {
      expect('(');
      const bool bracket = accept('[');
      std::vector<GroupPtr> factors{group()};
      while (accept(',')) factors.push_back(group());
      if (bracket) expect(']');
      expect(')');
      return free_product(std::move(factors));
    }
    if (name == "ascending_union") {
      expect('(');
      if (accept('[')) return explicit_chain();
      const std::string chain = identifier();
      expect(',');
      const int depth = integer();
      expect(')');
      if (chain == "sum_z2") return sum_z2_chain(depth);
      if (chain == "sym") return symmetric_chain(depth);
      fail("unknown chain '" + chain + "'");
    }
    throw DomainError("unknown group constructor '" + name + "'");
  }

  GroupPtr with_int(GroupPtr (*make)(int)) {
    expect('(');
    const int n = integer();
    expect(')');
    return make(n);
  }

  // After the opening '[' of ascending_union([[...], [...]]).
  GroupPtr explicit_chain() {
    std::vector<std::vector<std::vector<std::vector<int>>>> levels;
    do {
      expect('[');
      std::vector<std::vector<std::vector<int>>> perms;
      if (!accept(']')) {
        do {
          perms.push_back(cycles());
        } while (accept(','));
        expect(']');
      }
      levels.push_back(std::move(perms));
    } while (accept(','));
    expect(']');
    expect(')');
    int degree = 1;
    for (const auto& level : levels) {
      for (const auto& perm : level) {
        for (const auto& cyc : perm) {
          for (int p : cyc) degree = std::max(degree, p + 1);
        }
      }
    }
    std::vector<std::vector<Permutation>> gens;
    std::vector<std::vector<std::string>> labels;
    int counter = 0;
    std::ostringstream spec;
    spec << "ascending_union([";
    for (std::size_t n = 0; n < levels.size(); ++n) {
      if (n) spec << ", ";
      spec << '[';
      gens.emplace_back();
      labels.emplace_back();
      for (std::size_t j = 0; j < levels[n].size(); ++j) {
        if (j) spec << ", ";
        Permutation p = detail::identity_permutation(degree);
        for (auto it = levels[n][j].rbegin(); it != levels[n][j].rend(); ++it) {
          Permutation c = detail::identity_permutation(degree);
          for (std::size_t k = 0; k < it->size(); ++k) {
            c[static_cast<std::size_t>((*it)[k])] = static_cast<std::uint16_t>((*it)[(k + 1) % it->size()]);
          }
          p = detail::compose(c, p);
        }
        for (const auto& cyc : levels[n][j]) {
          spec << '(';
          for (std::size_t k = 0; k < cyc.size(); ++k) spec << (k ? " " : "") << cyc[k] + 1;
          spec << ')';
        }
        gens.back().push_back(p);
        labels.back().push_back("g" + std::to_string(++counter));
      }
      spec << ']';
    }
    spec << "])";
    return std::make_shared<AscendingUnionGroup>(spec.str(), degree, std::move(gens), std::move(labels));
  }

  std::vector<std::vector<int>> cycles() {
    std::vector<std::vector<int>> out;
    skip();
    while (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      std::vector<int> cyc;
      while (!accept(')')) {
        accept(',');
        const int point = integer();
        if (point < 1) fail("points are 1-based");
        cyc.push_back(point - 1);
      }
      out.push_back(std::move(cyc));
      skip();
    }
    if (out.empty()) fail("expected a permutation in cycle notation");
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupPtr parse_group_spec(std::string_view text) { return SpecParser(text).parse(); }

}  // namespace ends

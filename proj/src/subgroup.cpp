#include "ends/subgroup.hpp"

#include "ends/ball.hpp"

namespace ends {

Subgroup Subgroup::whole(GroupPtr g) { return Subgroup(std::move(g), Kind::Whole, -1); }

Subgroup Subgroup::trivial(GroupPtr g) { return Subgroup(std::move(g), Kind::Trivial, -1); }

Subgroup Subgroup::factor(GroupPtr g, int index) {
  const auto& fp = as<FreeProductGroup>(*g);
  if (index < 0 || index >= static_cast<int>(fp.factors().size())) {
    throw DomainError("factor index " + std::to_string(index + 1) + " out of range for " + g->spec());
  }
  return Subgroup(std::move(g), Kind::Factor, index);
}

bool Subgroup::contains(const Element& g) const {
  group_->require(g);
  switch (kind_) {
    case Kind::Whole:
      return true;
    case Kind::Trivial:
      return group_->is_identity(g);
    case Kind::Factor: {
      const auto syl = as<FreeProductGroup>(*group_).syllables(g);
      return syl.empty() || (syl.size() == 1 && syl[0].factor == factor_);
    }
  }
  return false;
}

Element Subgroup::coset_key(const Element& g) const {
  group_->require(g);
  switch (kind_) {
    case Kind::Whole:
      return group_->identity();
    case Kind::Trivial:
      return g;
    case Kind::Factor: {
      const auto& fp = as<FreeProductGroup>(*group_);
      auto syl = fp.syllables(g);
      // hg only touches the first syllable, so dropping an H-syllable there
      // gives the same key for the whole coset.
      if (!syl.empty() && syl.front().factor == factor_) syl.erase(syl.begin());
      return fp.from_syllables(std::move(syl));
    }
  }
  return g;
}

bool Subgroup::is_finite() const {
  switch (kind_) {
    case Kind::Trivial:
      return true;
    case Kind::Whole:
      return group_->order().has_value();
    case Kind::Factor:
      return as<FreeProductGroup>(*group_).factor(factor_).order().has_value();
  }
  return false;
}

GroupPtr Subgroup::marked() const {
  switch (kind_) {
    case Kind::Whole:
      return group_;
    case Kind::Trivial:
      return nullptr;
    case Kind::Factor:
      return as<FreeProductGroup>(*group_).factors()[static_cast<std::size_t>(factor_)];
  }
  return nullptr;
}

Element Subgroup::embed(const Element& h) const {
  switch (kind_) {
    case Kind::Whole:
      group_->require(h);
      return h;
    case Kind::Trivial:
      throw DomainError("the trivial subgroup has no marked group");
    case Kind::Factor:
      return as<FreeProductGroup>(*group_).embed(factor_, h);
  }
  return h;
}

std::vector<Element> Subgroup::generators() const {
  std::vector<Element> out;
  if (kind_ == Kind::Trivial) return out;
  for (const auto& s : marked()->ball_generators()) out.push_back(embed(s));
  return out;
}

std::vector<Element> Subgroup::sphere(int r) const {
  std::vector<Element> out;
  if (kind_ == Kind::Trivial) {
    if (r == 0) out.push_back(group_->identity());
    return out;
  }
  Ball b(marked(), r);
  for (const auto& h : b.sphere(r)) out.push_back(embed(h));
  return out;
}

std::string Subgroup::describe() const {
  switch (kind_) {
    case Kind::Whole:
      return "whole";
    case Kind::Trivial:
      return "trivial";
    case Kind::Factor:
      return "factor(" + std::to_string(factor_ + 1) + ")";
  }
  return "";
}

}  // namespace ends

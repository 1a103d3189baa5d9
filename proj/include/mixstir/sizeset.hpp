#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mixstir {

/// Set of allowed cycle (or block) lengths. Zero is never a member.
///
/// Text syntax: "all", "evens", "odds", "<=m", ">=m", "{a,b,c}" and the
/// complement "!{a,b,c}".
class SizeSet {
  public:
    struct All {};
    struct Evens {};
    struct Odds {};
    struct AtMost { std::size_t m; };
    struct AtLeast { std::size_t m; };
    struct Explicit { std::set<std::size_t> members; };
    struct Complement { std::set<std::size_t> excluded; };

    using Repr = std::variant<All, Evens, Odds, AtMost, AtLeast, Explicit, Complement>;

    SizeSet() : repr_(All{}) {}

    static SizeSet all() { return SizeSet(All{}); }
    static SizeSet evens() { return SizeSet(Evens{}); }
    static SizeSet odds() { return SizeSet(Odds{}); }
    static SizeSet at_most(std::size_t m) { return SizeSet(AtMost{m}); }
    static SizeSet at_least(std::size_t m) { return SizeSet(AtLeast{m}); }
    static SizeSet of(std::set<std::size_t> members);
    static SizeSet complement_of(std::set<std::size_t> excluded);

    /// Parses the text syntax; throws std::invalid_argument on malformed input.
    static SizeSet parse(std::string_view text);

    bool contains(std::size_t s) const;

    /// Members s with 1 <= s <= bound, ascending.
    std::vector<std::size_t> members_up_to(std::size_t bound) const;

    /// This set with s removed.
    SizeSet without(std::size_t s) const;

    bool is_all() const;

    /// Canonical text form; removals made by without() print as "\{...}".
    std::string to_string() const;

    friend bool operator==(const SizeSet& a, const SizeSet& b) { return a.to_string() == b.to_string(); }

  private:
    explicit SizeSet(Repr r) : repr_(std::move(r)) {}

    Repr repr_;
    std::set<std::size_t> removed_;
};

}  // namespace mixstir

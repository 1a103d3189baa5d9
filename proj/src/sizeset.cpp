#include "mixstir/sizeset.hpp"

#include <charconv>
#include <stdexcept>

namespace mixstir {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::size_t parse_number(std::string_view text, std::string_view whole) {
    std::size_t v = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (text.empty() || ec != std::errc{} || ptr != last) {
        throw std::invalid_argument("invalid size set '" + std::string(whole) + "'");
    }
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

std::set<std::size_t> parse_braced(std::string_view body, std::string_view whole) {
    if (body.size() < 2 || body.front() != '{' || body.back() != '}') {
        throw std::invalid_argument("invalid size set '" + std::string(whole) + "'");
    }
    body = trim(body.substr(1, body.size() - 2));
    std::set<std::size_t> out;
    if (body.empty()) return out;
    while (true) {
        const auto comma = body.find(',');
        const auto item = trim(body.substr(0, comma));
        const std::size_t v = parse_number(item, whole);
        if (v == 0) throw std::invalid_argument("size set members must be >= 1");
        out.insert(v);
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    return out;
}

std::string braced(const std::set<std::size_t>& xs) {
    std::string s = "{";
    bool first = true;
    for (auto x : xs) {
        if (!first) s += ',';
        s += std::to_string(x);
        first = false;
    }
    return s + "}";
}

}  // namespace

SizeSet SizeSet::of(std::set<std::size_t> members) {
    if (members.count(0) != 0) throw std::invalid_argument("size set members must be >= 1");
    return SizeSet(Explicit{std::move(members)});
}

SizeSet SizeSet::complement_of(std::set<std::size_t> excluded) {
    excluded.erase(0);
    return SizeSet(Complement{std::move(excluded)});
}

SizeSet SizeSet::parse(std::string_view text) {
    const auto whole = text;
    text = trim(text);
    if (text == "all") return all();
    if (text == "evens") return evens();
    if (text == "odds") return odds();
    if (text.starts_with("<=")) return at_most(parse_number(trim(text.substr(2)), whole));
    if (text.starts_with(">=")) return at_least(parse_number(trim(text.substr(2)), whole));
    if (text.starts_with("!")) return complement_of(parse_braced(trim(text.substr(1)), whole));
    if (text.starts_with("{")) return of(parse_braced(text, whole));
    throw std::invalid_argument("invalid size set '" + std::string(whole) + "'");
}

bool SizeSet::contains(std::size_t s) const {
    if (s == 0 || removed_.count(s) != 0) return false;
    return std::visit(overloaded{
                          [](const All&) { return true; },
                          [s](const Evens&) { return s % 2 == 0; },
                          [s](const Odds&) { return s % 2 == 1; },
                          [s](const AtMost& a) { return s <= a.m; },
                          [s](const AtLeast& a) { return s >= a.m; },
                          [s](const Explicit& e) { return e.members.count(s) != 0; },
                          [s](const Complement& c) { return c.excluded.count(s) == 0; },
                      },
                      repr_);
}

std::vector<std::size_t> SizeSet::members_up_to(std::size_t bound) const {
    std::vector<std::size_t> out;
    for (std::size_t s = 1; s <= bound; ++s) {
        if (contains(s)) out.push_back(s);
    }
    return out;
}

SizeSet SizeSet::without(std::size_t s) const {
    SizeSet copy = *this;
    if (auto* e = std::get_if<Explicit>(&copy.repr_)) {
        e->members.erase(s);
    } else if (auto* c = std::get_if<Complement>(&copy.repr_)) {
        if (s != 0) c->excluded.insert(s);
    } else if (auto* a = std::get_if<All>(&copy.repr_); a != nullptr && s != 0) {
        copy.repr_ = Complement{{s}};
    } else if (s != 0 && contains(s)) {
        copy.removed_.insert(s);
    }
    return copy;
}

bool SizeSet::is_all() const { return std::holds_alternative<All>(repr_) && removed_.empty(); }

std::string SizeSet::to_string() const {
    std::string base = std::visit(overloaded{
                                      [](const All&) { return std::string("all"); },
                                      [](const Evens&) { return std::string("evens"); },
                                      [](const Odds&) { return std::string("odds"); },
                                      [](const AtMost& a) { return "<=" + std::to_string(a.m); },
                                      [](const AtLeast& a) { return ">=" + std::to_string(a.m); },
                                      [](const Explicit& e) { return braced(e.members); },
                                      [](const Complement& c) { return "!" + braced(c.excluded); },
                                  },
                                  repr_);
    if (!removed_.empty()) base += "\\" + braced(removed_);
    return base;
}

}  // namespace mixstir

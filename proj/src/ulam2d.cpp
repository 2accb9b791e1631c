#include "ulam/ulam2d.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "ulam/errors.hpp"

namespace ulam {

namespace {

void validate_initials(const std::vector<Vec2>& initials, int bound,
                       bool cap_by_l1) {
    std::set<Vec2> seen;
    for (Vec2 v : initials) {
        if (v.x < 0 || v.y < 0)
            throw std::invalid_argument("initial vectors must be nonnegative");
        if (v == Vec2{0, 0})
            throw std::invalid_argument("the zero vector cannot seed a set");
        int norm = cap_by_l1 ? v.norm() : std::max(v.x, v.y);
        if (norm > bound)
            throw std::invalid_argument("initial vector outside the ball");
        if (!seen.insert(v).second)
            throw std::invalid_argument("initial vectors must be distinct");
    }
}

}  // namespace

bool UlamSet2D::contains(Vec2 v) const {
    if (v.x < 0 || v.y < 0 || v.norm() > bound_)
        throw std::out_of_range("point outside the examined ball");
    return member_[std::size_t(v.x) * (bound_ + 1) + v.y] != 0;
}

RepCount UlamSet2D::rep_count(Vec2 v) const {
    if (v.x < 0 || v.y < 0 || v.norm() > bound_)
        throw std::out_of_range("point outside the examined ball");
    switch (reps_[std::size_t(v.x) * (bound_ + 1) + v.y]) {
        case 0: return RepCount::Zero;
        case 1: return RepCount::One;
        default: return RepCount::Many;
    }
}

// Shell-by-shell construction. Representations of a norm-s point use two
// nonzero points whose norms sum to s, so both lie in earlier shells; every
// pair is tallied once, when its later member activates, which is always
// before the shell of their sum is decided.
class Gen2D {
  public:
    Gen2D(const std::vector<Vec2>& initials, int bound,
          const GenLimits2D& limits, std::optional<u64> shuffle_seed)
        : shuffle_seed_(shuffle_seed) {
        if (bound < 0) throw std::invalid_argument("negative norm bound");
        validate_initials(initials, bound, true);
        std::size_t side = std::size_t(bound) + 1;
        if (side * side > limits.max_cells)
            throw BudgetError("norm ball exceeds the cell budget");

        set_.initials_ = initials;
        set_.bound_ = bound;
        set_.member_.assign(side * side, 0);
        set_.reps_.assign(side * side, 0);
    }

    UlamSet2D run() {
        const int B = set_.bound_;
        for (Vec2 v : set_.initials_) {
            set_.member_[idx(v)] = 1;
            activate(v);
        }

        std::mt19937_64 rng(shuffle_seed_.value_or(0));
        for (int s = 1; s <= B; ++s) {
            std::vector<Vec2> admit;
            for (int x = 0; x <= s; ++x) {
                Vec2 c{x, s - x};
                if (!set_.member_[idx(c)] && set_.reps_[idx(c)] == 1)
                    admit.push_back(c);
            }
            if (shuffle_seed_) {
                std::shuffle(admit.begin(), admit.end(), rng);
                for (Vec2 c : admit) {
                    if (set_.member_[idx(c)] || set_.reps_[idx(c)] != 1)
                        continue;  // cannot happen: same-shell sums land higher
                    set_.member_[idx(c)] = 1;
                    activate(c);
                }
            } else {
                for (Vec2 c : admit) set_.member_[idx(c)] = 1;
                for (Vec2 c : admit) activate(c);
            }
        }

        for (int x = 0; x <= B; ++x)
            for (int y = 0; x + y <= B; ++y)
                if (set_.member_[idx({x, y})]) set_.elements_.push_back({x, y});
        return std::move(set_);
    }

  private:
    std::size_t idx(Vec2 v) const {
        return std::size_t(v.x) * (set_.bound_ + 1) + v.y;
    }

    void activate(Vec2 u) {
        for (Vec2 w : active_) {
            Vec2 t{u.x + w.x, u.y + w.y};
            if (t.norm() <= set_.bound_) {
                auto& r = set_.reps_[idx(t)];
                if (r < 2) ++r;
            }
        }
        active_.push_back(u);
    }

    UlamSet2D set_;
    std::vector<Vec2> active_;
    std::optional<u64> shuffle_seed_;
};

UlamSet2D generate_2d(const std::vector<Vec2>& initials, int norm_bound,
                      const GenLimits2D& limits) {
    return Gen2D(initials, norm_bound, limits, std::nullopt).run();
}

UlamSet2D generate_2d_shuffled(const std::vector<Vec2>& initials, int norm_bound,
                               u64 seed, const GenLimits2D& limits) {
    return Gen2D(initials, norm_bound, limits, seed).run();
}

std::vector<Vec2> base_set_A(int norm_bound) {
    std::set<Vec2> pts;
    for (int m = 0; m + 1 <= norm_bound; ++m) {
        pts.insert({m, 1});
        pts.insert({1, m});
    }
    for (int x = 1; x <= norm_bound; x += 2)
        for (int y = 1; x + y <= norm_bound; y += 2) pts.insert({x, y});
    return {pts.begin(), pts.end()};
}

bool is_nondegenerate(const std::vector<Vec2>& initials,
                      const GenLimits2D& limits) {
    if (initials.size() < 2)
        throw std::invalid_argument("degeneracy needs at least two initials");
    for (std::size_t i = 0; i < initials.size(); ++i) {
        Vec2 v = initials[i];
        std::vector<Vec2> others;
        for (std::size_t j = 0; j < initials.size(); ++j)
            // vectors of norm >= |v| cannot appear in a representation below it
            if (j != i && initials[j].norm() < v.norm())
                others.push_back(initials[j]);
        if (generate_2d(others, v.norm(), limits).contains(v)) return false;
    }
    return true;
}

const char* type_kind_name(TypeKind k) {
    switch (k) {
        case TypeKind::LType: return "L";
        case TypeKind::ColumnDeleted: return "column-deleted";
        case TypeKind::ColumnDeletedL: return "column-deleted-L";
        case TypeKind::ShiftedColumnDeleted: return "shifted-column-deleted";
        case TypeKind::Exceptional: return "exceptional";
    }
    return "?";
}

TypeClass classify(int v1, int v2) {
    if (v1 <= 0 || v2 <= 0)
        throw std::invalid_argument(
            "axis seeds fall outside the five-type classification");
    bool odd1 = v1 % 2 != 0, odd2 = v2 % 2 != 0;
    if (v1 == 1 || v2 == 1 || (odd1 && odd2))
        throw DegenerateSeedError("seed is already generated by the axes");

    if (v1 == 2 && v2 == 2) return {TypeKind::Exceptional, false};
    if (!odd1 && !odd2) {
        if (v1 >= 4 && v2 >= 4) return {TypeKind::LType, false};
        // one coordinate is 2: column-deleted L wants it second
        return v2 == 2 ? TypeClass{TypeKind::ColumnDeletedL, false}
                       : TypeClass{TypeKind::ColumnDeletedL, true};
    }
    // exactly one odd coordinate: the definitions put the even one first
    int even = odd1 ? v2 : v1;
    int odd = odd1 ? v1 : v2;
    (void)even;
    TypeKind kind =
        odd == 3 ? TypeKind::ShiftedColumnDeleted : TypeKind::ColumnDeleted;
    return {kind, odd1};
}

namespace {

// Closed-form set in the orientation of the definitions: s2 carries the
// class-specific small coordinate (2 or 3) where one exists.
std::vector<Vec2> type_points(TypeKind kind, int s1, int s2, int B) {
    std::set<Vec2> pts;
    auto put = [&](int x, int y) {
        if (x >= 0 && y >= 0 && x + y <= B) pts.insert({x, y});
    };

    put(s1, s2);
    for (int m = 0; m + 1 <= B; ++m) {
        put(m, 1);
        put(1, m);
    }

    switch (kind) {
        case TypeKind::LType:
            for (int m = 0; 2 * m * (s1 + s2) + 2 <= B; ++m)
                for (int a = 1; a + 1 + 2 * m * (s1 + s2) <= B; a += 2)
                    for (int b = 1; a + b + 2 * m * (s1 + s2) <= B; b += 2)
                        if (a < s1 || b < s2)
                            put(a + 2 * m * s1, b + 2 * m * s2);
            break;
        case TypeKind::ColumnDeleted:
            for (int x = 1; x <= B; x += 2)
                for (int y = 1; x + y <= B; y += 2)
                    if (x != s1 + 1 || y < s2) put(x, y);
            break;
        case TypeKind::ColumnDeletedL:
            for (int m = 0; (m + 1) * s2 + 2 + 2 * m + 5 <= B; m += 2)
                for (int a = 0; a + (m + 1) * s2 + 2 <= B; a += 2)
                    for (int b = 0;
                         a + (m + 1) * s2 + 2 + b + 2 * m + 5 <= B; b += 2)
                        if (a < m || b == 0)
                            put(a + (m + 1) * s2 + 2, b + 2 * m + 5);
            break;
        case TypeKind::ShiftedColumnDeleted:
            for (int x = 1; x < s1 && x <= B; x += 2)
                for (int y = 1; x + y <= B; y += 2) put(x, y);
            for (int x = s1 + 2; x <= B; x += 2)
                for (int y = 1; x + y <= B; y += 2) put(x, y);
            break;
        case TypeKind::Exceptional:
            put(8, 8);
            for (int m = 0; 2 * m + 8 <= B; ++m) {
                put(4, 2 * m + 4);
                put(2 * m + 4, 4);
            }
            break;
    }
    return {pts.begin(), pts.end()};
}

}  // namespace

std::vector<Vec2> type_set(const TypeClass& cls, int v1, int v2, int norm_bound) {
    if (!(classify(v1, v2) == cls))
        throw std::invalid_argument("type class does not match the seed");
    if (cls.reflected) {
        auto pts = type_points(cls.kind, v2, v1, norm_bound);
        for (Vec2& p : pts) std::swap(p.x, p.y);
        std::sort(pts.begin(), pts.end());
        return pts;
    }
    return type_points(cls.kind, v1, v2, norm_bound);
}

TypeVerdict verify_type(int v1, int v2, int norm_bound,
                        const GenLimits2D& limits) {
    TypeVerdict verdict;
    verdict.cls = classify(v1, v2);
    verdict.compared_bound = norm_bound - std::max(v1, v2);
    if (verdict.compared_bound < 0)
        throw std::invalid_argument("norm bound smaller than the seed");

    UlamSet2D gen =
        generate_2d({{1, 0}, {0, 1}, {v1, v2}}, norm_bound, limits);
    auto closed = type_set(verdict.cls, v1, v2, norm_bound);
    std::set<Vec2> closed_set(closed.begin(), closed.end());

    verdict.discrepancy_count = 0;
    for (int x = 0; x <= verdict.compared_bound; ++x) {
        for (int y = 0; x + y <= verdict.compared_bound; ++y) {
            Vec2 p{x, y};
            bool g = gen.contains(p);
            bool c = closed_set.count(p) != 0;
            if (g == c) continue;
            ++verdict.discrepancy_count;
            auto& sample = g ? verdict.sample_missing : verdict.sample_extra;
            if (sample.size() < 8) sample.push_back(p);
        }
    }
    verdict.matches = verdict.discrepancy_count == 0;
    return verdict;
}

std::optional<Vec2> parity_vector(const UlamSet2D& set) {
    for (Vec2 v : set.initials())
        if ((v.x == 0 || v.y == 0) && v != Vec2{1, 0} && v != Vec2{0, 1})
            throw std::invalid_argument(
                "parity scan requires seeds off the axes beyond the two units");

    const int B = set.norm_bound();
    const std::size_t side = std::size_t(B) + 2;
    // suffix counts of elements per coordinate-parity class
    std::vector<std::uint32_t> cnt[2][2];
    for (auto& row : cnt)
        for (auto& g : row) g.assign(side * side, 0);
    auto at = [&](std::vector<std::uint32_t>& g, int x, int y) -> std::uint32_t& {
        return g[std::size_t(x) * side + y];
    };

    for (int x = B; x >= 0; --x) {
        for (int y = B; y >= 0; --y) {
            bool member = x + y <= B && set.contains({x, y});
            for (int p = 0; p < 2; ++p)
                for (int q = 0; q < 2; ++q) {
                    auto& g = cnt[p][q];
                    at(g, x, y) = at(g, x + 1, y) + at(g, x, y + 1) -
                                  at(g, x + 1, y + 1) +
                                  (member && x % 2 == p && y % 2 == q ? 1 : 0);
                }
        }
    }

    for (int s = 0; s <= B; ++s) {
        for (int x = 0; x <= s; ++x) {
            int y = s - x;
            bool ok = true;
            for (int p = 0; p < 2 && ok; ++p)
                for (int q = 0; q < 2 && ok; ++q)
                    if (p != x % 2 || q != y % 2)
                        ok = at(cnt[p][q], x, y) == 0;
            if (ok) return Vec2{x, y};
        }
    }
    return std::nullopt;
}

std::vector<Vec2> generate_2d_linf(const std::vector<Vec2>& initials, int bound) {
    if (bound < 0) throw std::invalid_argument("negative norm bound");
    validate_initials(initials, bound, false);

    const std::size_t side = std::size_t(bound) + 1;
    std::vector<std::uint8_t> member(side * side, 0), reps(side * side, 0);
    auto idx = [&](Vec2 v) { return std::size_t(v.x) * side + v.y; };

    std::vector<Vec2> elements;
    auto activate = [&](Vec2 u) {
        for (Vec2 w : elements) {
            Vec2 t{u.x + w.x, u.y + w.y};
            if (t.x <= bound && t.y <= bound) {
                auto& r = reps[idx(t)];
                if (r < 2) ++r;
            }
        }
        elements.push_back(u);
    };

    for (Vec2 v : initials) {
        member[idx(v)] = 1;
        activate(v);
    }

    // Sup norms do not add along sums, so admit a single point per round:
    // the smallest (by sup norm, then lexicographically) unique-rep point.
    // Sums involving a point never land below its own sup norm, so the
    // admitted norm sequence is nondecreasing and the scan is complete.
    while (true) {
        std::optional<Vec2> next;
        for (int s = 0; s <= bound && !next; ++s) {
            // shell in lexicographic order: (0,s) .. (s-1,s), then (s,0) .. (s,s)
            for (int x = 0; x < s && !next; ++x) {
                Vec2 c{x, s};
                if (!member[idx(c)] && reps[idx(c)] == 1) next = c;
            }
            for (int y = 0; y <= s && !next; ++y) {
                Vec2 c{s, y};
                if (!member[idx(c)] && reps[idx(c)] == 1) next = c;
            }
        }
        if (!next) break;
        member[idx(*next)] = 1;
        activate(*next);
    }

    std::sort(elements.begin(), elements.end());
    return elements;
}

}  // namespace ulam

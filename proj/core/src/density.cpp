#include "hyperopic/density.hpp"

#include <limits>

namespace hyperopic {
namespace {

void check_parts(int i, int j, const char* who) {
    detail::require(i >= 2 && j >= 2, std::string(who) + ": both parts need at least two vertices");
}

void check_interior(const Rational& target, const char* who) {
    detail::require(target.num() > 0 && 2 * target.num() < target.den(),
                    std::string(who) + ": target must lie strictly inside (0, 1/2)");
}

} // namespace

int clique_join_cop_number(int r, int s) {
    check_parts(r, s, "clique_join_cop_number");
    return r / 2 + 1;
}

Rational element_density(int i, int j) {
    check_parts(i, j, "element_density");
    return Rational(i / 2 + 1, static_cast<long long>(i) + j);
}

long long density_margin(int i, int j, const Rational& target) {
    check_parts(i, j, "density_margin");
    check_interior(target, "density_margin");
    return target.num() * (static_cast<long long>(i) + j) -
           target.den() * (static_cast<long long>(i / 2) + 1);
}

int pad_for_positive_beta(const Rational& target, int i, int j) {
    check_parts(i, j, "pad_for_positive_beta");
    check_interior(target, "pad_for_positive_beta");
    long long a = target.num(), b = target.den();
    // a*(i + j') > b*(i/2 + 1), minimal j' >= j
    long long need = b * (i / 2 + 1) - a * i;
    long long jp = need < 0 ? j : std::max<long long>(j, need / a + 1);
    detail::invariant(jp <= std::numeric_limits<int>::max(), "padded part fits an int");
    detail::invariant(density_margin(i, static_cast<int>(jp), target) > 0,
                      "padding must produce a positive margin");
    detail::invariant(jp == j || density_margin(i, static_cast<int>(jp) - 1, target) <= 0,
                      "padding must be minimal");
    return static_cast<int>(jp);
}

DiophantineSolution solve_diophantine(const Rational& target, int i, int j) {
    check_parts(i, j, "solve_diophantine");
    check_interior(target, "solve_diophantine");
    long long a = target.num(), b = target.den();
    long long beta = density_margin(i, j, target);
    if (beta <= 0)
        throw NeedPaddingError("margin " + std::to_string(beta) +
                               " is not positive; add co-clique vertices first");
    // With x even the balance reduces to one linear equation; its x and y
    // coefficients are coprime and positive, so solutions occupy a single
    // residue class and y grows with x. The first even x that fits is the
    // componentwise-minimal solution.
    long long cx, cy, rhs;
    if (b % 2 == 0) {
        cx = b / 2 - a;
        cy = a;
        rhs = beta;
    } else {
        cx = b - 2 * a;
        cy = 2 * a;
        rhs = 2 * beta;
    }
    for (long long x = 0;; x += 2) {
        detail::invariant(x <= rhs / cx + 2 * cy + 2,
                          "a solution must appear within one parity period");
        long long num = cx * x - rhs;
        if (num < 0 || num % cy != 0) continue;
        DiophantineSolution s{x, num / cy};
        detail::invariant(i + s.x <= std::numeric_limits<int>::max() - j - s.y,
                          "solved element fits an int");
        detail::invariant(element_density(static_cast<int>(i + s.x),
                                          static_cast<int>(j + s.y)) == target,
                          "balance solution must land on the target exactly");
        return s;
    }
}

std::vector<Rational> approximant_sequence(const Rational& target, int count) {
    detail::require(count >= 1, "approximant_sequence: need at least one term");
    detail::require(Rational(0) <= target && target <= Rational(1, 2),
                    "approximant_sequence: target must lie in [0, 1/2]");
    std::vector<Rational> out{Rational(1, 2)};
    if (target == Rational(0)) {
        for (int n = 1; n <= count; ++n) out.emplace_back(1, n + 2);
        return out;
    }
    if (target == Rational(1, 2)) {
        for (int n = 1; n <= count; ++n) out.emplace_back(n, 2 * n + 1);
        return out;
    }
    std::vector<Rational> inner;
    for (const Rational& c : target.convergents())
        if (Rational(0) < c && c < Rational(1, 2)) inner.push_back(c);
    detail::invariant(!inner.empty(), "an interior target has interior convergents");
    for (int n = 1; n <= count; ++n)
        out.push_back(n <= static_cast<int>(inner.size()) ? inner[n - 1] : target);
    return out;
}

std::optional<Rational> named_target(const std::string& name) {
    if (name == "1/pi") return Rational(113, 355);
    if (name == "1/e") return Rational(1001, 2721);
    if (name == "sqrt2/4") return Rational(1393, 3940);
    return std::nullopt;
}

namespace {

ChainRow make_row(int n, const Rational& p, int i, int j, long long x, long long y) {
    ChainRow row;
    row.n = n;
    row.p = p;
    row.i = i;
    row.j = j;
    row.x_added = x;
    row.y_added = y;
    row.cop_number = clique_join_cop_number(i, j);
    row.order = i + j;
    row.density = element_density(i, j);
    return row;
}

} // namespace

Chain build_chain_from(const std::vector<Rational>& approximants, const Rational& target) {
    detail::require(!approximants.empty() && approximants.front() == Rational(1, 2),
                    "build_chain: the chain starts at density 1/2");
    Chain chain;
    chain.target = target;
    int i = 2, j = 2;
    chain.rows.push_back(make_row(0, approximants.front(), i, j, 0, 0));
    for (std::size_t n = 1; n < approximants.size(); ++n) {
        const Rational& goal = approximants[n];
        detail::require(Rational(0) < goal && goal < Rational(1, 2),
                        "build_chain: interior densities must lie strictly inside (0, 1/2)");
        // Vertex n of the alternating enumeration joins its side first.
        if (n % 2 == 1) ++j;
        else ++i;
        long long x = 0, y = 0;
        if (element_density(i, j) != goal) {
            j = pad_for_positive_beta(goal, i, j);
            DiophantineSolution s = solve_diophantine(goal, i, j);
            x = s.x;
            y = s.y;
            i += static_cast<int>(s.x);
            j += static_cast<int>(s.y);
        }
        detail::invariant(element_density(i, j) == goal,
                          "every chain element lands on its approximant");
        chain.rows.push_back(make_row(static_cast<int>(n), goal, i, j, x, y));
    }
    return chain;
}

Chain build_chain(const Rational& target, int count) {
    return build_chain_from(approximant_sequence(target, count), target);
}

} // namespace hyperopic

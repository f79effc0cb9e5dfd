#include "d43/b1l.hpp"

#include <algorithm>
#include <sstream>

namespace d43 {

namespace {

int pos(int a) { return a > 0 ? a : 0; }

std::string show(const Elem& b) {
    std::ostringstream os;
    os << '(' << b[0] << ',' << b[1] << ',' << b[2] << ',' << b[3] << ',' << b[4] << ','
       << b[5] << ')';
    return os.str();
}

std::array<bool, 6> f_conds(const ZVec& z) {
    const int a = z.z1 + z.z2 + z.z3 + 3 * z.z4;
    return {
        a <= 0 && z.z1 + z.z2 + 3 * z.z4 <= 0 && z.z1 + z.z2 <= 0 && z.z1 <= 0,
        a <= 0 && z.z2 + 3 * z.z4 <= 0 && z.z2 <= 0 && z.z1 > 0,
        z.z1 + z.z3 + 3 * z.z4 <= 0 && z.z3 + 3 * z.z4 <= 0 && z.z4 <= 0 && z.z2 > 0 &&
            z.z1 + z.z2 > 0,
        z.z1 + z.z2 + 3 * z.z4 > 0 && z.z2 + 3 * z.z4 > 0 && z.z4 > 0 && z.z3 <= 0 &&
            z.z1 + z.z3 <= 0,
        a > 0 && z.z3 + 3 * z.z4 > 0 && z.z3 > 0 && z.z1 <= 0,
        a > 0 && z.z1 + z.z3 + 3 * z.z4 > 0 && z.z1 + z.z3 > 0 && z.z1 > 0,
    };
}

// (E_i) is (F_i) with every > turned into >= and every <= into <.
std::array<bool, 6> e_conds(const ZVec& z) {
    const int a = z.z1 + z.z2 + z.z3 + 3 * z.z4;
    return {
        a < 0 && z.z1 + z.z2 + 3 * z.z4 < 0 && z.z1 + z.z2 < 0 && z.z1 < 0,
        a < 0 && z.z2 + 3 * z.z4 < 0 && z.z2 < 0 && z.z1 >= 0,
        z.z1 + z.z3 + 3 * z.z4 < 0 && z.z3 + 3 * z.z4 < 0 && z.z4 < 0 && z.z2 >= 0 &&
            z.z1 + z.z2 >= 0,
        z.z1 + z.z2 + 3 * z.z4 >= 0 && z.z2 + 3 * z.z4 >= 0 && z.z4 >= 0 && z.z3 < 0 &&
            z.z1 + z.z3 < 0,
        a >= 0 && z.z3 + 3 * z.z4 >= 0 && z.z3 >= 0 && z.z1 < 0,
        a >= 0 && z.z1 + z.z3 + 3 * z.z4 >= 0 && z.z1 + z.z3 >= 0 && z.z1 >= 0,
    };
}

int unique_case(const std::array<bool, 6>& cs, const Elem& b, const char* table) {
    int hit = -1;
    for (int c = 0; c < 6; ++c) {
        if (!cs[static_cast<std::size_t>(c)]) continue;
        if (hit >= 0)
            throw PartitionViolation(std::string(table) + " cases " + std::to_string(hit + 1) +
                                     " and " + std::to_string(c + 1) + " both hold at " + show(b));
        hit = c;
    }
    if (hit < 0) throw PartitionViolation(std::string(table) + " has no case at " + show(b));
    return hit;
}

std::optional<Elem> apply_row(const Elem& b, const std::array<int, 6>& d, int L) {
    Elem nb;
    for (std::size_t c = 0; c < 6; ++c) nb[c] = b[c] + d[c];
    if (!in_b(nb, L)) return std::nullopt;
    return nb;
}

}  // namespace

int s_of(const Elem& b) { return b[0] + b[1] + (b[2] + b[3]) / 2 + b[4] + b[5]; }

int t_of(const Elem& b) { return b[1] + (b[2] + b[3]) / 2; }

ZVec z_of(const Elem& b) { return {b[5] - b[0], b[4] - b[3], b[2] - b[1], (b[3] - b[2]) / 2}; }

std::array<int, 6> script_a(const Elem& b) {
    const ZVec z = z_of(b);
    return {0,
            z.z1,
            z.z1 + z.z2,
            z.z1 + z.z2 + 3 * z.z4,
            z.z1 + z.z2 + z.z3 + 3 * z.z4,
            2 * z.z1 + z.z2 + z.z3 + 3 * z.z4};
}

bool in_b(const Elem& b, int L) {
    for (int c : b)
        if (c < 0) return false;
    return (b[2] - b[3]) % 2 == 0 && s_of(b) <= L;
}

int f_case(const Elem& b) { return unique_case(f_conds(z_of(b)), b, "F"); }

int e_case(const Elem& b) { return unique_case(e_conds(z_of(b)), b, "E"); }

const std::array<std::array<int, 6>, 6>& f0_deltas() {
    static const std::array<std::array<int, 6>, 6> rows = {{
        {1, 0, 0, 0, 0, 0},
        {0, 0, 1, 1, 0, -1},
        {0, 0, 2, 0, -1, 0},
        {0, 1, 0, -2, 0, 0},
        {1, 0, -1, -1, 0, 0},
        {0, 0, 0, 0, 0, -1},
    }};
    return rows;
}

const std::array<std::array<int, 6>, 6>& e0_deltas() {
    static const std::array<std::array<int, 6>, 6> rows = {{
        {-1, 0, 0, 0, 0, 0},
        {0, 0, -1, -1, 0, 1},
        {0, 0, -2, 0, 1, 0},
        {0, -1, 0, 2, 0, 0},
        {-1, 0, 1, 1, 0, 0},
        {0, 0, 0, 0, 0, 1},
    }};
    return rows;
}

std::optional<Elem> f(int i, const Elem& b, int L) {
    const ZVec z = z_of(b);
    switch (i) {
        case 0:
            return apply_row(b, f0_deltas()[static_cast<std::size_t>(f_case(b))], L);
        case 1:
            if (pos(z.z2) <= -z.z3) return apply_row(b, {-1, 1, 0, 0, 0, 0}, L);
            if (z.z2 <= 0 && 0 < z.z3) return apply_row(b, {0, 0, -1, 1, 0, 0}, L);
            return apply_row(b, {0, 0, 0, 0, -1, 1}, L);  // z2 > (-z3)_+
        case 2:
            return apply_row(b, z.z4 <= 0 ? std::array<int, 6>{0, -1, 2, 0, 0, 0}
                                          : std::array<int, 6>{0, 0, 0, -2, 1, 0},
                             L);
        default:
            throw std::invalid_argument("operator index must be 0, 1 or 2");
    }
}

std::optional<Elem> e(int i, const Elem& b, int L) {
    const ZVec z = z_of(b);
    switch (i) {
        case 0:
            return apply_row(b, e0_deltas()[static_cast<std::size_t>(e_case(b))], L);
        case 1:
            if (z.z2 >= pos(-z.z3)) return apply_row(b, {0, 0, 0, 0, 1, -1}, L);
            if (z.z2 < 0 && 0 <= z.z3) return apply_row(b, {0, 0, 1, -1, 0, 0}, L);
            return apply_row(b, {1, -1, 0, 0, 0, 0}, L);  // (z2)_+ < -z3
        case 2:
            return apply_row(b, z.z4 >= 0 ? std::array<int, 6>{0, 0, 0, 2, -1, 0}
                                          : std::array<int, 6>{0, 1, -2, 0, 0, 0},
                             L);
        default:
            throw std::invalid_argument("operator index must be 0, 1 or 2");
    }
}

int eps(int i, const Elem& b, int L) {
    switch (i) {
        case 0: {
            const auto a = script_a(b);
            return L - s_of(b) + *std::max_element(a.begin(), a.end()) - a[5];
        }
        case 1:
            return b[5] + pos(b[3] - b[4] + pos(b[1] - b[2]));
        case 2:
            return b[4] + pos(b[2] - b[3]) / 2;
        default:
            throw std::invalid_argument("operator index must be 0, 1 or 2");
    }
}

int phi(int i, const Elem& b, int L) {
    switch (i) {
        case 0: {
            const auto a = script_a(b);
            return L - s_of(b) + *std::max_element(a.begin(), a.end());
        }
        case 1:
            return b[0] + pos(b[2] - b[1] + pos(b[4] - b[3]));
        case 2:
            return b[1] + pos(b[3] - b[2]) / 2;
        default:
            throw std::invalid_argument("operator index must be 0, 1 or 2");
    }
}

Weight wt(const Elem& b, int L) {
    return wt_from_eps_phi({eps(0, b, L), eps(1, b, L), eps(2, b, L)},
                           {phi(0, b, L), phi(1, b, L), phi(2, b, L)});
}

Elem f_max(int i, Elem b, int L) {
    while (auto nb = f(i, b, L)) b = *nb;
    return b;
}

std::vector<Elem> enumerate_b(int L) {
    std::vector<Elem> out;
    for (int x1 = 0; x1 <= L; ++x1)
        for (int x2 = 0; x1 + x2 <= L; ++x2)
            for (int x3 = 0; x3 <= 2 * (L - x1 - x2); ++x3)
                for (int xb3 = x3 % 2; x1 + x2 + (x3 + xb3) / 2 <= L; xb3 += 2)
                    for (int xb2 = 0; x1 + x2 + (x3 + xb3) / 2 + xb2 <= L; ++xb2)
                        for (int xb1 = 0; x1 + x2 + (x3 + xb3) / 2 + xb2 + xb1 <= L; ++xb1)
                            out.push_back({x1, x2, x3, xb3, xb2, xb1});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Elem> minimal_elements(int L) {
    std::vector<Elem> out;
    for (const Elem& b : enumerate_b(L)) {
        const long long lv = eps(0, b, L) + 2LL * eps(1, b, L) + 3LL * eps(2, b, L);
        if (lv == L) out.push_back(b);
    }
    return out;
}

std::vector<Elem> minimal_parametrized(int L) {
    std::vector<Elem> out;
    for (int a = 0; 2 * a <= L; ++a)
        for (int bb = 0; 2 * a + 3 * bb <= L; ++bb) out.push_back({a, bb, bb, bb, bb, a});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace d43

#include "k3lattice/cycles.hpp"

#include "k3lattice/linalg.hpp"
#include "k3lattice/matrix_io.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace k3lattice {

const IntegerMatrix& intersection_form_lt() {
    static const IntegerMatrix form = [] {
        IntegerMatrix g(cycle_rank, cycle_rank);
        for (std::size_t i = 0; i < l_count; ++i) g(i, i) = -2;
        for (int p = 1; p <= 4; ++p)
            for (int q = p + 1; q <= 4; ++q)
                for (int r = 1; r <= 4; ++r)
                    for (int s = r + 1; s <= 4; ++s)
                        g(t_index(p, q), t_index(r, s)) = 2 * permutation_sign(p, q, r, s);
        return g;
    }();
    return form;
}

Rational pairing(const CycleClass& a, const CycleClass& b) {
    const IntegerMatrix& g = intersection_form_lt();
    Rational acc = 0;
    for (std::size_t i = 0; i < cycle_rank; ++i) {
        if (a[i] == 0) continue;
        Rational row = 0;
        for (std::size_t j = 0; j < cycle_rank; ++j) {
            if (g(i, j) == 0 || b[j] == 0) continue;
            row += Rational(g(i, j)) * b[j];
        }
        acc += a[i] * row;
    }
    return acc;
}

namespace {

CycleClass L(int n) { return CycleClass::l_class(n); }
CycleClass T(int p, int q) { return CycleClass::t_class(p, q); }

const Rational half = make_rational(1, 2);

std::string s_name_of(const std::array<int, 4>& labels) {
    std::string name = "S";
    for (int l : labels)
        name += l <= 9 ? std::to_string(l) : "(" + std::to_string(l) + ")";
    return name;
}

NamedSCycle make_s(const std::array<int, 4>& labels, const CycleClass& t_part) {
    CycleClass c;
    for (int l : labels) c -= half * L(l);
    c += half * t_part;
    return NamedSCycle{s_name_of(labels), labels, c};
}

// Moves every L_n coefficient (n in 1..8) up to L_{n+8}; T coefficients stay.
CycleClass shift_up8(const CycleClass& c) {
    CycleClass out;
    for (int n = 1; n <= 8; ++n) out[l_index(n + 8)] = c[l_index(n)];
    for (std::size_t t = l_count; t < cycle_rank; ++t) out[t] = c[t];
    return out;
}

} // namespace

const std::vector<NamedSCycle>& named_s_cycles() {
    static const std::vector<NamedSCycle> cycles = [] {
        std::vector<NamedSCycle> v;
        // Spheres in the x4 = 0 group of fixed points.
        v.push_back(make_s({1, 3, 5, 7}, T(1, 2)));
        v.push_back(make_s({2, 1, 5, 6}, T(1, 3) + T(2, 3)));
        v.push_back(make_s({5, 6, 4, 3}, T(2, 3)));
        v.push_back(make_s({3, 4, 8, 7}, T(1, 3) - T(2, 3)));
        // Their copies in the x4 = 1/2 group: labels shifted by 8, same tori.
        v.push_back(make_s({9, 11, 13, 15}, T(1, 2)));
        v.push_back(make_s({10, 9, 13, 14}, T(1, 3) + T(2, 3)));
        v.push_back(make_s({13, 14, 12, 11}, T(2, 3)));
        v.push_back(make_s({11, 12, 16, 15}, T(1, 3) - T(2, 3)));
        // Spheres whose tori run between the two groups.
        v.push_back(make_s({1, 2, 9, 10}, T(3, 4)));
        v.push_back(make_s({7, 1, 9, 15}, -T(2, 4)));
        v.push_back(make_s({1, 3, 11, 9}, T(1, 4)));
        return v;
    }();
    return cycles;
}

CycleClass s_cycle(std::string_view name) {
    for (const auto& s : named_s_cycles())
        if (s.name == name) return s.cycle;
    throw std::invalid_argument("s_cycle: unknown cycle name '" + std::string(name) + "'");
}

CycleClass sign_variant(const CycleClass& s, const std::array<int, 5>& eps) {
    for (int e : eps)
        if (e != 1 && e != -1) throw std::invalid_argument("sign_variant: eps entries must be +-1");

    std::vector<std::size_t> l_slots;
    for (std::size_t i = 0; i < l_count; ++i) {
        if (s[i] == 0) continue;
        if (s[i] != half && s[i] != -half)
            throw std::invalid_argument("sign_variant: L-coefficients must be +-1/2");
        l_slots.push_back(i);
    }
    if (l_slots.size() != 4)
        throw std::invalid_argument("sign_variant: expected exactly four L-coefficients");
    for (std::size_t t = l_count; t < cycle_rank; ++t)
        if (!is_integral(s[t] * 2))
            throw std::invalid_argument("sign_variant: T-coefficients must be half-integral");

    CycleClass out = s;
    for (std::size_t k = 0; k < 4; ++k) out[l_slots[k]] *= eps[k];
    for (std::size_t t = l_count; t < cycle_rank; ++t) out[t] *= eps[4];
    return out;
}

const CanonicalBasis& build_canonical_basis() {
    static const CanonicalBasis basis = [] {
        CanonicalBasis cb;
        auto& w = cb.w;
        // First eight generators: explicit half-integral combinations over
        // the x4 = 0 fixed points, chosen so their Gram matrix is E8(-1).
        w[0] = half * (L(1) - L(3) - L(5) - L(7)) - half * T(1, 2);
        w[1] = half * (L(1) + L(2) + L(5) + L(6)) - half * (T(1, 3) + T(2, 3));
        w[2] = -half * (L(1) + L(2)) + half * (L(5) + L(6)) + half * (T(1, 3) + T(2, 3));
        w[3] = -L(6);
        w[4] = half * (L(3) + L(4)) - half * L(5) + half * L(6) - half * T(2, 3);
        w[5] = -L(4);
        w[6] = -half * L(3) + half * L(4) + half * (L(7) + L(8)) - half * (T(1, 3) - T(2, 3));
        w[7] = -L(8);
        // Second eight: same formulas one fixed-point group up.
        for (std::size_t k = 0; k < 8; ++k) w[8 + k] = shift_up8(w[k]);

        w[16] = T(1, 2);
        w[18] = T(1, 3);
        w[20] = T(2, 3);
        cb.w_prime_18 = -half * (L(1) - L(2) + L(9) - L(10)) + half * T(3, 4);
        cb.w_prime_20 = -half * (L(1) + L(7) + L(9) + L(15)) - half * T(2, 4);
        cb.w_prime_22 = -half * (L(1) + L(3) + L(9) + L(11)) + half * T(1, 4);
        // Correction summands turn the primed block into hyperbolic planes.
        w[17] = cb.w_prime_18 + w[16];
        w[19] = cb.w_prime_20 + w[16] + w[18];
        w[21] = cb.w_prime_22 + w[16] + w[18] + w[20];
        return cb;
    }();
    return basis;
}

RationalMatrix gram_of(const std::vector<CycleClass>& cycles) {
    const std::size_t n = cycles.size();
    RationalMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            g(i, j) = pairing(cycles[i], cycles[j]);
            g(j, i) = g(i, j);
        }
    return g;
}

namespace {

// Expected pairings of (w17, w'18, w19, w'20, w21, w'22).
const RationalMatrix& lambda2_primed_expected() {
    static const RationalMatrix m = to_rational(IntegerMatrix(6, 6,
                                                              {
                                                                  0, 1, 0, 0, 0, 0,   //
                                                                  1, -2, 0, -1, 0, -1, //
                                                                  0, 0, 0, 1, 0, 0,   //
                                                                  0, -1, 1, -2, 0, -1, //
                                                                  0, 0, 0, 0, 0, 1,   //
                                                                  0, -1, 0, -1, 1, -2, //
                                                              }));
    return m;
}

} // namespace

VerificationReport verify_canonical() {
    const CanonicalBasis& basis = build_canonical_basis();
    VerificationReport report;
    report.gram_w = IntegerMatrix(cycle_rank, cycle_rank);

    const std::vector<CycleClass> all(basis.w.begin(), basis.w.end());
    const RationalMatrix gram = gram_of(all);

    report.pairings_integral = true;
    for (std::size_t i = 0; i < cycle_rank && report.pairings_integral; ++i)
        for (std::size_t j = 0; j < cycle_rank; ++j)
            if (!is_integral(gram(i, j))) {
                report.pairings_integral = false;
                report.notes.push_back("pairing of w" + std::to_string(i + 1) + " and w" +
                                       std::to_string(j + 1) + " is not an integer: " +
                                       format_rational(gram(i, j)));
                break;
            }
    if (report.pairings_integral)
        if (auto integral = to_integer(gram)) report.gram_w = *integral;

    const IntegerMatrix expected =
        direct_sum({e8_minus(), e8_minus(), hyperbolic_h(), hyperbolic_h(), hyperbolic_h()}).gram();
    report.matches_canonical = report.pairings_integral && report.gram_w == expected;
    if (!report.matches_canonical)
        report.notes.push_back("gram(w1..w22) does not equal E8(-1) + E8(-1) + H + H + H");

    const std::vector<CycleClass> lambda1(basis.w.begin(), basis.w.begin() + 16);
    report.lambda1_matches =
        gram_of(lambda1) == to_rational(direct_sum({e8_minus(), e8_minus()}).gram());

    const std::vector<CycleClass> lambda2_primed = {basis.w[16], basis.w_prime_18, basis.w[18],
                                                    basis.w_prime_20, basis.w[20], basis.w_prime_22};
    report.lambda2_primed_matches = gram_of(lambda2_primed) == lambda2_primed_expected();

    const std::vector<CycleClass> lambda2(basis.w.begin() + 16, basis.w.end());
    report.lambda2_h3_matches =
        gram_of(lambda2) ==
        to_rational(direct_sum({hyperbolic_h(), hyperbolic_h(), hyperbolic_h()}).gram());

    report.blocks_orthogonal = true;
    for (std::size_t a = 0; a < 16 && report.blocks_orthogonal; ++a)
        for (std::size_t b = 16; b < cycle_rank; ++b)
            if (gram(a, b) != 0) {
                report.blocks_orthogonal = false;
                break;
            }

    report.det_lt = determinant(intersection_form_lt());
    const Rational det_w_exact = determinant(gram);
    if (is_integral(det_w_exact)) {
        report.det_w = to_integer(det_w_exact);
    } else {
        report.det_w = 0;
        report.notes.push_back("det of the w-Gram is not an integer: " +
                               format_rational(det_w_exact));
    }

    try {
        report.index = sublattice_index_from_determinants(report.det_lt, report.det_w);
    } catch (const std::exception& e) {
        report.index = 0;
        report.notes.push_back(std::string("index computation failed: ") + e.what());
    }

    if (report.det_lt == Integer(-4194304) && report.index == 2048)
        report.notes.push_back(
            "sublattice index: sqrt(|det_lt / det_w|) = sqrt(2^22) = 2^11 = 2048; a stated "
            "\"index 2^{22}\" contradicts det_lt = -2^{22}, since the index enters the "
            "determinant squared (det_sub = index^2 * det_full); 2^{22} is the square of "
            "the computed index");

    return report;
}

std::string report_to_text(const VerificationReport& report) {
    auto yes_no = [](bool b) { return b ? "yes" : "no"; };
    std::string out = "canonical basis verification\n";
    out += "gram(w1..w22):\n";
    out += to_text(report.gram_w);
    out += std::string("pairings integral: ") + yes_no(report.pairings_integral) + "\n";
    out += std::string("matches E8(-1) + E8(-1) + H + H + H: ") + yes_no(report.matches_canonical) + "\n";
    out += std::string("lambda1 block = E8(-1) + E8(-1): ") + yes_no(report.lambda1_matches) + "\n";
    out += std::string("lambda2 primed 6x6 block matches: ") + yes_no(report.lambda2_primed_matches) + "\n";
    out += std::string("lambda2 block = H + H + H: ") + yes_no(report.lambda2_h3_matches) + "\n";
    out += std::string("lambda1 orthogonal to lambda2: ") + yes_no(report.blocks_orthogonal) + "\n";
    out += "det_lt = " + format_integer(report.det_lt) + "\n";
    out += "det_w = " + format_integer(report.det_w) + "\n";
    out += "index = " + format_integer(report.index) + "\n";
    if (!report.notes.empty()) {
        out += "notes:\n";
        for (const auto& n : report.notes) out += "- " + n + "\n";
    }
    out += std::string("CANONICAL: ") +
           (report.matches_canonical && report.pairings_integral ? "yes" : "no") + "\n";
    return out;
}

ChangeOfBasis change_of_basis() {
    const CanonicalBasis& basis = build_canonical_basis();
    RationalMatrix b(cycle_rank, cycle_rank);
    for (std::size_t j = 0; j < cycle_rank; ++j)
        for (std::size_t i = 0; i < cycle_rank; ++i) b(i, j) = basis.w[j][i];
    if (determinant(b) == 0)
        throw inconsistency_error("change_of_basis: the w-cycles do not span, base change is singular");
    ChangeOfBasis out{b, inverse(b), true};
    for (std::size_t i = 0; i < cycle_rank && out.lt_in_w_integral; ++i)
        for (std::size_t j = 0; j < cycle_rank; ++j)
            if (!is_integral(out.b_inv(i, j))) {
                out.lt_in_w_integral = false;
                break;
            }
    return out;
}

std::optional<SphericalDecomposition> spherical_decomposition(int p, int q) {
    if (!(1 <= p && p < q && q <= 4))
        throw std::invalid_argument("spherical_decomposition: need 1 <= p < q <= 4");
    const std::size_t target = t_index(p, q);

    for (const auto& named : named_s_cycles()) {
        // Want the whole T-part equal to +-1/2 [T_pq].
        bool clean = true;
        for (std::size_t t = l_count; t < cycle_rank && clean; ++t)
            if (t != target && named.cycle[t] != 0) clean = false;
        if (!clean) continue;
        const Rational& coeff = named.cycle[target];
        if (coeff != half && coeff != -half) continue;

        SphericalDecomposition dec;
        dec.s_name = named.name;
        dec.t_sign_flipped = (coeff == -half);
        dec.s_used = dec.t_sign_flipped ? sign_variant(named.cycle, {1, 1, 1, 1, -1}) : named.cycle;
        dec.l_labels = named.labels;
        std::sort(dec.l_labels.begin(), dec.l_labels.end());

        CycleClass rhs = Rational(2) * dec.s_used;
        for (int l : dec.l_labels) rhs += L(l);
        if (!(rhs == T(p, q)))
            throw std::logic_error("spherical_decomposition: identity failed for " + named.name);
        return dec;
    }
    return std::nullopt;
}

} // namespace k3lattice

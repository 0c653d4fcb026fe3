#include <catch2/catch_amalgamated.hpp>
#include <colax/linmap.hpp>
#include <random>

using namespace colax;

namespace {

// Dense oracles, kept independent of the sparse implementation.
template <class K> using Dense = std::vector<std::vector<K>>;

template <class K> Dense<K> to_dense(const LinMap<K>& f) {
    Dense<K> m(f.codomain()->dim(), std::vector<K>(f.domain()->dim(), K(0)));
    for (int j = 0; j < f.domain()->dim(); ++j)
        for (auto& [i, c] : f.column(j))
            m[i][j] = c;
    return m;
}

template <class K> Dense<K> dense_mul(const Dense<K>& a, const Dense<K>& b) {
    Dense<K> c(a.size(), std::vector<K>(b.empty() ? 0 : b[0].size(), K(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[k].size(); ++j)
                c[i][j] = c[i][j] + a[i][k] * b[k][j];
    return c;
}

template <class K> int dense_rank(Dense<K> m) {
    int rank = 0;
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
        std::size_t piv = rank;
        while (piv < rows && is_zero(m[piv][c]))
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[rank], m[piv]);
        K inv = K(1) / m[rank][c];
        for (auto& x : m[rank])
            x = x * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == static_cast<std::size_t>(rank) || is_zero(m[r][c]))
                continue;
            K f = m[r][c];
            for (std::size_t j = 0; j < cols; ++j)
                m[r][j] = m[r][j] - f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

template <class K>
LinMap<K> random_map(const SpacePtr& dom, const SpacePtr& cod, std::mt19937_64& rng,
                     int density_pct = 60) {
    LinMap<K> f(dom, cod);
    for (int j = 0; j < dom->dim(); ++j)
        for (int i = 0; i < cod->dim(); ++i) {
            if (static_cast<int>(rng() % 100) < density_pct) {
                long v = static_cast<long>(rng() % 7) - 3;
                f.add_entry(i, j, K(v));
            }
        }
    return f;
}

} // namespace

TEMPLATE_TEST_CASE("compose basics", "[linalg]", Rational, Fp) {
    using K = TestType;
    if constexpr (std::is_same_v<K, Fp>)
        Fp::set_modulus(7);
    auto V3 = make_space("V3", 3);
    auto id3 = LinMap<K>::identity(V3);
    REQUIRE(compose(id3, id3) == id3);

    auto W = make_space("W", 2);
    auto z = LinMap<K>::zero(V3, W);
    auto f = random_map<K>(W, V3, *new std::mt19937_64(5));
    REQUIRE(compose(z, f).is_zero_map());
}

TEMPLATE_TEST_CASE("compose equals dense product oracle", "[linalg]", Rational, Fp) {
    using K = TestType;
    if constexpr (std::is_same_v<K, Fp>)
        Fp::set_modulus(5);
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        auto A = make_space("A", 4), B = make_space("B", 4), C = make_space("C", 4);
        auto f = random_map<K>(B, C, rng);
        auto g = random_map<K>(A, B, rng);
        auto fg = compose(f, g);
        auto oracle = dense_mul(to_dense(f), to_dense(g));
        REQUIRE(to_dense(fg) == oracle);
    }
}

TEST_CASE("kernel: identity and [1 1]", "[linalg]") {
    auto V = make_space("V", 3);
    auto [kid, kid_incl] = kernel(LinMap<Rational>::identity(V), {"K", "k"});
    REQUIRE(kid->dim() == 0);

    auto U = make_space("U", 2);
    auto L = make_space("L", 1);
    LinMap<Rational> f(U, L);
    f.add_entry(0, 0, Rational(1));
    f.add_entry(0, 1, Rational(1));
    auto [ker, incl] = kernel(f, {"K", "k"});
    REQUIRE(ker->dim() == 1);
    REQUIRE(incl.entry(0, 0) == Rational(-1)); // leading-one on the free column
    REQUIRE(incl.entry(1, 0) == Rational(1));
    REQUIRE(compose(f, incl).is_zero_map());
}

TEMPLATE_TEST_CASE("rank-nullity against dense elimination", "[linalg]", Rational, Fp) {
    using K = TestType;
    if constexpr (std::is_same_v<K, Fp>)
        Fp::set_modulus(3);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        auto D = make_space("D", 7), C = make_space("C", 5);
        auto f = random_map<K>(D, C, rng, 40);
        int r = dense_rank(to_dense(f));
        REQUIRE(rank(f) == r);
        auto [ker, incl] = kernel(f, {"K", "k"});
        REQUIRE(ker->dim() == 7 - r);
        REQUIRE(compose(f, incl).is_zero_map());
        auto [im, im_incl] = image(f, {"I", "i"});
        REQUIRE(im->dim() == r);
    }
}

TEST_CASE("solve returns a solution exactly when b is in the image", "[linalg]") {
    std::mt19937_64 rng(11);
    int solved = 0, unsolved = 0;
    for (int trial = 0; trial < 20; ++trial) {
        auto D = make_space("D", 4), C = make_space("C", 5);
        auto f = random_map<Rational>(D, C, rng, 35);
        SparseVec<Rational> b;
        for (int i = 0; i < 5; ++i) {
            long v = static_cast<long>(rng() % 5) - 2;
            if (v)
                b.emplace_back(i, Rational(v));
        }
        auto x = solve(f, b);
        if (x) {
            ++solved;
            SparseVec<Rational> fx = f.apply(*x), diff = fx;
            vec_add_scaled(diff, b, Rational(-1));
            REQUIRE(diff.empty());
        } else {
            ++unsolved;
            LinMap<Rational> bmap(make_space("pt", 1), C);
            bmap.set_column(0, b);
            REQUIRE_FALSE(lands_in(f, bmap));
        }
    }
    REQUIRE(solved > 0);
    REQUIRE(unsolved > 0);
}

TEMPLATE_TEST_CASE("tensor of maps", "[linalg]", Rational, Fp) {
    using K = TestType;
    if constexpr (std::is_same_v<K, Fp>)
        Fp::set_modulus(2);
    auto A = make_space("A", 2), B = make_space("B", 3);
    auto t = tensor_map(LinMap<K>::identity(A), LinMap<K>::identity(B));
    REQUIRE(t.domain()->dim() == 6);
    REQUIRE(t == LinMap<K>::identity(t.domain()));

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 8; ++trial) {
        auto f = random_map<K>(make_space("X", 3), make_space("Y", 2), rng, 50);
        auto g = random_map<K>(make_space("Z", 2), make_space("W", 3), rng, 50);
        REQUIRE(rank(tensor_map(f, g)) == rank(f) * rank(g));
    }
}

TEST_CASE("results independent of insertion order", "[linalg]") {
    auto V = make_space("V", 3), W = make_space("W", 3);
    LinMap<Rational> f(V, W), g(V, W);
    f.add_entry(0, 0, Rational(2));
    f.add_entry(2, 1, Rational(5));
    f.add_entry(1, 0, Rational(-1));
    g.add_entry(1, 0, Rational(-1));
    g.add_entry(0, 0, Rational(1));
    g.add_entry(2, 1, Rational(5));
    g.add_entry(0, 0, Rational(1));
    REQUIRE(f == g);
}

TEST_CASE("factor_through recovers coordinates", "[linalg]") {
    auto V = make_space("V", 4);
    auto S = make_space("S", 2);
    LinMap<Rational> incl(S, V);
    incl.add_entry(0, 0, Rational(1));
    incl.add_entry(2, 0, Rational(3));
    incl.add_entry(1, 1, Rational(2));
    auto f = compose(incl, LinMap<Rational>::identity(S));
    auto g = factor_through(incl, f);
    REQUIRE(g == LinMap<Rational>::identity(S));

    LinMap<Rational> outside(make_space("P", 1), V);
    outside.add_entry(3, 0, Rational(1));
    REQUIRE_FALSE(lands_in(incl, outside));
    REQUIRE_THROWS_AS(factor_through(incl, outside), std::domain_error);
}

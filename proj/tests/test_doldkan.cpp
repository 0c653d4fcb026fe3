#include <catch2/catch_amalgamated.hpp>
#include <colax/fixtures.hpp>

using namespace colax;

namespace {
// number of order-preserving surjections [n] ->> [k] is binom(n, n-k)
long binom(long n, long k) {
    if (k < 0 || k > n)
        return 0;
    long r = 1;
    for (long i = 0; i < k; ++i)
        r = r * (n - i) / (i + 1);
    return r;
}
} // namespace

TEST_CASE("surjection enumeration counts", "[doldkan]") {
    for (int n = 0; n <= 4; ++n)
        for (int k = 0; k <= n; ++k)
            REQUIRE(static_cast<long>(surjections(n, k).size()) == binom(n, n - k));
    REQUIRE(surjections(2, 3).empty());
}

TEST_CASE("Gamma: level dimensions and degree-0 case", "[doldkan]") {
    // dim C^0 = 1, dim C^-1 = 1 -> dim Gamma(C)_2 = 1 + 2 = 3
    ChainComplex<Rational> C("C", 1);
    C.set_component(0, make_space("C0", 1));
    C.set_component(-1, make_space("C1", 1));
    C.finalize();
    auto Cp = freeze(std::move(C));
    auto G = gamma_functor(Cp, 3);
    REQUIRE(G->level(0)->dim() == 1);
    REQUIRE(G->level(1)->dim() == 2);
    REQUIRE(G->level(2)->dim() == 3);
    REQUIRE(G->level(3)->dim() == 4);
    REQUIRE(G->check_simplicial_identities().empty());

    // concentrated in degree 0 -> constant module
    ChainComplex<Rational> D("D", 2);
    D.set_component(0, make_space("D0", 2));
    D.finalize();
    auto Dp = freeze(std::move(D));
    auto GD = gamma_functor(Dp, 3);
    for (int n = 0; n <= 3; ++n)
        REQUIRE(GD->level(n)->dim() == 2);
    for (int n = 1; n <= 3; ++n)
        for (int i = 0; i <= n; ++i)
            REQUIRE(rank(GD->face(n, i)) == 2);
}

TEMPLATE_TEST_CASE("Gamma images satisfy the simplicial identities", "[doldkan]", Rational, Fp) {
    using K = TestType;
    if constexpr (std::is_same_v<K, Fp>)
        Fp::set_modulus(2);
    Rng rng(2024);
    for (int t = 0; t < 5; ++t) {
        auto C = random_complex<K>(rng, 2, 3);
        auto G = gamma_functor(C, 3);
        REQUIRE(G->check_simplicial_identities().empty());
    }
}

TEST_CASE("identity checker reports corruption with witness", "[doldkan]") {
    auto V = make_space("V", 2);
    auto X = constant_module<Rational>(V, 2);
    SimplicialModule<Rational> bad("bad", 2);
    for (int n = 0; n <= 2; ++n)
        bad.set_level(n, V);
    for (int n = 1; n <= 2; ++n)
        for (int i = 0; i <= n; ++i)
            bad.set_face(n, i, LinMap<Rational>::identity(V));
    for (int n = 0; n < 2; ++n)
        for (int i = 0; i <= n; ++i) {
            auto s = LinMap<Rational>::identity(V);
            if (n == 0 && i == 0)
                s.add_entry(0, 1, Rational(1)); // corrupt one s_0 entry
            bad.set_degeneracy(n, i, s);
        }
    auto fails = bad.check_simplicial_identities();
    REQUIRE_FALSE(fails.empty());
    REQUIRE_FALSE(fails[0].witness.empty());
    REQUIRE(X->check_simplicial_identities().empty());
}

TEMPLATE_TEST_CASE("Dold-Kan roundtrip and triangle identities", "[doldkan]", Rational, Fp) {
    using K = TestType;
    if constexpr (std::is_same_v<K, Fp>)
        Fp::set_modulus(2);
    Rng rng(55);
    for (int t = 0; t < 4; ++t) {
        int n_max = 3, depth = 2;
        auto C = random_complex<K>(rng, depth, 3);
        auto GC = gamma_functor(C, n_max);

        // eps: N(Gamma C) -> C is a chain iso
        auto eps = dk_epsilon(C, GC);
        for (int n = -depth; n <= 0; ++n) {
            REQUIRE(eps.component(n).domain()->dim() == C->component(n)->dim());
            REQUIRE(rank(eps.component(n)) == C->component(n)->dim());
        }
        for (int n = -n_max; n < -depth; ++n)
            REQUIRE(eps.component(n).domain()->dim() == 0);

        // eta: X -> Gamma(N X) is a simplicial iso; triangle identities hold
        auto X = random_module<K>(rng, n_max, depth, 3);
        auto GNX = gamma_functor(X->normalized().complex, n_max);
        auto eta = dk_eta(X, GNX);
        for (int n = 0; n <= n_max; ++n)
            REQUIRE(rank(eta.level(n)) == X->level(n)->dim());

        // (eps N) . (N eta) = id_{N X}
        auto Neta = normalized_map(eta);
        auto epsNX = dk_epsilon(X->normalized().complex, GNX);
        REQUIRE(compose(epsNX, Neta) == ChainMap<K>::identity(X->normalized().complex));

        // (Gamma eps) . (eta Gamma) = id_{Gamma C}
        auto GG = gamma_functor(GC->normalized().complex, n_max);
        auto etaGC = dk_eta(GC, GG);
        auto Geps = gamma_on_map(dk_epsilon(C, GC), GG, GC);
        REQUIRE(compose(Geps, etaGC) == SimplicialMap<K>::identity(GC));
    }
}

TEST_CASE("pi_n(Gamma C) recovers H^{-n}(C); Moore = normalized homology", "[doldkan]") {
    Rng rng(77);
    for (int t = 0; t < 4; ++t) {
        auto C = random_complex<Rational>(rng, 2, 3);
        auto G = gamma_functor(C, 3);
        for (int n = 0; n < 3; ++n) {
            auto pg = homotopy_groups(*G, n);
            REQUIRE_FALSE(pg.boundary_flagged);
            REQUIRE(pg.space->dim() == homology(*C, -n).space->dim());
        }
        auto X = random_module<Rational>(rng, 3, 2, 3);
        auto M = moore_complex(*X);
        auto N = X->normalized().complex;
        for (int n = 0; n <= 2; ++n)
            REQUIRE(homology(*M, -n).space->dim() == homology(*N, -n).space->dim());
    }
}

TEST_CASE("normalized module: constant case and direct sum decomposition", "[doldkan]") {
    auto V = make_space("V", 3);
    auto X = constant_module<Rational>(V, 3);
    auto N = X->normalized().complex;
    REQUIRE(N->component(0)->dim() == 3);
    for (int n = 1; n <= 3; ++n)
        REQUIRE(N->component(-n)->dim() == 0);

    Rng rng(5);
    auto Y = random_module<Rational>(rng, 3, 2, 3);
    const auto& NY = Y->normalized();
    for (int n = 0; n <= 3; ++n) {
        REQUIRE(NY.complex->component(-n)->dim() + NY.degen_incl[n].domain()->dim() ==
                Y->level(n)->dim());
        // s_i images lie in the kernel of the normalization projection
        if (n >= 1)
            for (int i = 0; i < n; ++i)
                REQUIRE(compose(NY.proj[n], Y->degeneracy(n - 1, i)).is_zero_map());
    }
}

TEMPLATE_TEST_CASE("AW and shuffle: identities at low degree, AW.nabla = id, symmetry",
                   "[doldkan]", Rational, Fp) {
    using K = TestType;
    if constexpr (std::is_same_v<K, Fp>)
        Fp::set_modulus(2);
    Rng rng(99);
    for (int t = 0; t < 4; ++t) {
        int n_max = 3;
        auto A = random_module<K>(rng, n_max, 2, 2, "A");
        auto B = random_module<K>(rng, n_max, 2, 2, "B");
        auto AB = tensor_levelwise(A, B);
        auto aw = aw_map(A, B, AB);
        auto sh = shuffle_map(A, B, AB);

        // AW . nabla = id on N(A) (x) N(B) (exactly, not just up to homotopy)
        auto comp = compose(aw.map, sh.map);
        auto idm = ChainMap<K>::identity(sh.source.total);
        for (int n = -n_max; n <= 0; ++n)
            REQUIRE(comp.component(n) == idm.component(n));

        // nabla symmetric: nabla_{B,A} . sigma_K = N(sigma) . nabla_{A,B}
        auto BA = tensor_levelwise(B, A);
        auto shBA = shuffle_map(B, A, BA);
        auto sigmaK = tensor_symmetry(sh.source, shBA.source);
        auto Nsigma = normalized_map(simplicial_symmetry(AB, BA));
        REQUIRE(compose(shBA.map, sigmaK) == compose(Nsigma, sh.map));

        // nabla . AW homotopic to the identity (solved homotopy, verified)
        auto ninc = compose(sh.map, aw.map);
        auto H = find_chain_homotopy(ninc, ChainMap<K>::identity(ninc.source()));
        REQUIRE(H.status != HomotopyStatus::none);
        REQUIRE(homotopy_verifies(ninc, ChainMap<K>::identity(ninc.source()), H,
                                  H.status == HomotopyStatus::found));

        // AW symmetric up to a solved homotopy
        auto awBA = aw_map(B, A, BA);
        auto sigmaK2 = tensor_symmetry(aw.target, awBA.target);
        auto lhs = compose(sigmaK2, aw.map);
        auto rhs = compose(awBA.map, Nsigma);
        auto H2 = find_chain_homotopy(lhs, rhs);
        REQUIRE(H2.status != HomotopyStatus::none);
        REQUIRE(homotopy_verifies(lhs, rhs, H2, H2.status == HomotopyStatus::found));
    }
}

TEST_CASE("shuffle (1,1) example and AW level-1 formula", "[doldkan]") {
    // A = B = Gamma(k in degrees 0 and -1 with zero differential)
    ChainComplex<Rational> C("C", 2);
    C.set_component(0, make_space("C0", {"u"}));
    C.set_component(-1, make_space("C1", {"v"}));
    C.finalize();
    auto Cp = freeze(std::move(C));
    auto A = gamma_functor(Cp, 3);
    auto AB = tensor_levelwise(A, A);
    auto sh = shuffle_map(A, A, AB);

    // source block (-1, -1): single basis vector v (x) v; image should be
    // s1 v (x) s0 v - s0 v (x) s1 v inside level 2
    const auto& NA = A->normalized();
    REQUIRE(NA.complex->component(-1)->dim() == 1);
    int col = sh.source.index(-1, NA.complex->component(-1)->labels[0], -1,
                              NA.complex->component(-1)->labels[0]);
    auto img = sh.map.component(-2).column(col);
    // expand back into level 2 of AB
    const auto& NT = AB->normalized();
    SparseVec<Rational> lifted;
    for (auto& [r, c] : img)
        vec_add_scaled(lifted, NT.incl[2].column(r), c);
    LinMap<Rational> s0 = A->degeneracy(1, 0), s1 = A->degeneracy(1, 1);
    auto v = NA.incl[1].column(0);
    SparseVec<Rational> expect;
    auto add_pair = [&](const SparseVec<Rational>& xa, const SparseVec<Rational>& xb,
                        const Rational& c) {
        for (auto& [ra, va] : xa)
            for (auto& [rb, vb] : xb) {
                int idx = AB->level(2)->at(
                    tensor_label(A->level(2)->labels[ra], A->level(2)->labels[rb]));
                vec_add_scaled(expect, SparseVec<Rational>{{idx, c * va * vb}}, Rational(1));
            }
    };
    add_pair(s1.apply(v), s0.apply(v), Rational(1));
    add_pair(s0.apply(v), s1.apply(v), Rational(-1));
    sort_by_index(lifted);
    sort_by_index(expect);
    REQUIRE(lifted == expect);

    // AW at level 1: a (x) b |-> a (x) d0 b + dfin a (x) b in bidegrees (-1,0)+(0,-1)
    auto aw = aw_map(A, A, AB);
    const auto& NTc = AB->normalized().complex;
    for (int j = 0; j < NTc->component(-1)->dim(); ++j) {
        auto out = aw.map.component(-1).column(j);
        // check the bidegree split exists: entries only in blocks (0,-1), (-1,0)
        for (auto& [r, c] : out) {
            auto [p, la, q, lb] = split_graded_tensor(aw.target.total->component(-1)->labels[r]);
            REQUIRE(p + q == -1);
        }
    }
}

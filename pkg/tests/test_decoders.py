import itertools
import random
from fractions import Fraction

import pytest

from expander_codes import (
    DecodeOutcome,
    ErasureConfig,
    ExpanderParams,
    FindConfig,
    GuessSchedule,
    InvalidParameters,
    Word,
    collisions,
    decode_erasures,
    find_suspects,
    fixed_find_and_decode,
    flip_decode_ss,
    flip_round,
    gen_left_regular,
    guess_expansion_decode_grid,
    guess_expansion_decode_poly,
    guess_flip_decode,
    min_distance_bruteforce,
    parse_word,
    plant_errors,
    sample_codeword,
    scaled_guess_flip_decode,
    syndrome,
    unique_neighbors,
    viderman_decode,
)
from expander_codes.decoders import grid_guess_values
from conftest import cyc_graph


class TestFindConfig:
    def test_plain_threshold_exactness(self):
        cfg = FindConfig.from_delta(Fraction(1, 4))  # h = (1/2) * d
        assert cfg.admits(2, 4) and not cfg.admits(1, 4)

    def test_sqrt_threshold_exactness(self):
        # delta = sqrt(1/16) = 1/4 exactly: same admissions as plain 1/4
        cfg = FindConfig(Fraction(1, 16), 0)
        for c in range(5):
            assert cfg.admits(c, 4) == FindConfig.from_delta(Fraction(1, 4)).admits(c, 4)

    def test_effective_threshold(self):
        assert FindConfig.from_delta(0).effective_threshold(4) == 4
        assert FindConfig.from_delta(Fraction(1, 4)).effective_threshold(4) == 2
        assert FindConfig(0, Fraction(49, 100)).effective_threshold(50) == 1

    def test_from_delta_range(self):
        with pytest.raises(InvalidParameters):
            FindConfig.from_delta(Fraction(1, 2))


class TestFindSuspects:
    def test_no_unsatisfied_checks(self, tri3):
        trace = find_suspects(tri3, Word.zero(3), FindConfig.from_delta(0))
        assert trace.order == ()

    def test_tri3_delta_zero(self, tri3):
        trace = find_suspects(tri3, parse_word("100"), FindConfig.from_delta(0))
        assert trace.l_set == {0}
        assert trace.r_set == {0, 2}
        assert trace.growth == (2,)  # |R| after each addition

    def test_growth_monotone(self, decode_instances):
        g = decode_instances[0].graph
        trace = find_suspects(
            g, Word.from_support(g.n_left, [0, 3]), FindConfig.from_delta(Fraction(1, 3))
        )
        assert list(trace.growth) == sorted(trace.growth)
        if trace.growth:
            assert trace.growth[-1] == len(trace.r_set)

    def test_tri3_delta_quarter(self, tri3):
        trace = find_suspects(
            tri3, parse_word("100"), FindConfig.from_delta(Fraction(1, 4))
        )
        assert trace.l_set == {0, 1, 2}

    def test_order_independence_disciplines(self):
        rng = random.Random(0)
        for case in range(300):
            g = gen_left_regular(10, 7, 3, case % 20)
            y = Word(10, rng.getrandbits(10))
            cfg = FindConfig.from_delta(Fraction(rng.randrange(0, 12), 24))
            runs = [
                find_suspects(g, y, cfg, order="ascending").l_set,
                find_suspects(g, y, cfg, order="descending").l_set,
                find_suspects(g, y, cfg, order="random", seed=case).l_set,
            ]
            assert runs[0] == runs[1] == runs[2]

    def test_errors_contained_when_unique_neighbor_condition_holds(self, decode_instances):
        inst = decode_instances[0]
        g, eps = inst.graph, inst.eps
        cfg = FindConfig.from_delta(eps)
        need = (1 - 2 * eps) * g.d_left
        for f in itertools.combinations(range(g.n_left), 2):
            precondition = all(
                len(unique_neighbors(g, sub)) >= need * len(sub)
                for r in (1, 2)
                for sub in itertools.combinations(f, r)
            )
            if not precondition:
                continue
            trace = find_suspects(g, Word.from_support(g.n_left, f), cfg)
            assert set(f) <= trace.l_set

    def test_errors_first_ordering_realizable(self, decode_instances):
        inst = decode_instances[0]
        g, eps = inst.graph, inst.eps
        cfg = FindConfig.from_delta(eps)
        need = (1 - 2 * eps) * g.d_left
        checked = 0
        for f in itertools.combinations(range(g.n_left), 2):
            precondition = all(
                len(unique_neighbors(g, sub)) >= need * len(sub)
                for r in (1, 2)
                for sub in itertools.combinations(f, r)
            )
            if not precondition:
                continue
            trace = find_suspects(g, Word.from_support(g.n_left, f), cfg, prefer=f)
            # progress at every one of the first |F| steps: the preferred
            # queue alone carries the loop until F is exhausted
            assert set(trace.order[: len(f)]) == set(f)
            checked += 1
        assert checked > 0


class TestDecodeErasures:
    def test_single_erasure_peels(self, tri3):
        out = decode_erasures(tri3, parse_word("1?1"))
        assert out.ok and out.word.to_string() == "111"
        assert out.path == "peeling"
        assert out.corrected == 1

    def test_full_erasure_ambiguous(self, tri3):
        out = decode_erasures(tri3, parse_word("???"))
        assert not out.ok and out.reason == "stalled"

    def test_cyc4_peel(self):
        out = decode_erasures(cyc_graph(4), parse_word("1??1"))
        assert out.ok and out.word.to_string() == "1111"

    def test_inconsistent_known_bits(self, tri3):
        out = decode_erasures(tri3, parse_word("10?"))
        assert not out.ok and out.reason == "not-a-codeword"

    def test_gauss_fallback_solves_stalled_peel(self, decode_instances):
        # erase a full codeword support minus nothing... use a pattern whose
        # checks all touch >= 2 erasures yet columns stay independent
        inst = decode_instances[0]
        g = inst.graph
        c = min_distance_bruteforce(g).witness
        erase = c.support()[:4]
        mask = sum(1 << i for i in erase)
        out = decode_erasures(g, Word(g.n_left, c.bits & ~mask, mask))
        assert out.ok and out.word == c

    def test_capacity_enforced_with_config(self, tri3):
        cfg = ErasureConfig(Fraction(1, 10), Fraction(1, 3), Fraction(1, 4))
        assert cfg.max_erasures(3) == 1
        out = decode_erasures(tri3, parse_word("??1"), cfg)
        assert not out.ok and out.reason == "radius-exceeded"
        assert decode_erasures(tri3, parse_word("1?1"), cfg).ok

    def test_within_budget_always_unique(self, decode_instances):
        # any erasure count below the distance has independent columns
        inst = decode_instances[1]
        g = inst.graph
        rng = random.Random(1)
        for _ in range(50):
            k = rng.randint(0, inst.distance - 1)
            mask = sum(1 << i for i in rng.sample(range(g.n_left), k))
            out = decode_erasures(g, Word(g.n_left, 0, mask))
            assert out.ok and out.word.bits == 0


class TestFlipDecode:
    def test_already_codeword(self, tri3):
        out = flip_decode_ss(tri3, parse_word("111"), 1)
        assert out.ok and out.iterations == 0

    def test_single_error(self, tri3):
        out = flip_decode_ss(tri3, parse_word("100"), 1)
        assert out.ok and out.word.to_string() == "000"

    def test_two_errors_flip_to_complement_codeword(self, tri3):
        out = flip_decode_ss(tri3, parse_word("110"), 1)
        assert out.ok and out.word.to_string() == "111"

    def test_threshold_range(self, tri3):
        with pytest.raises(InvalidParameters):
            flip_decode_ss(tri3, parse_word("100"), Fraction(1, 2))


class TestFlipRound:
    def test_degenerate_threshold_flips_all(self, tri3):
        w, rep = flip_round(tri3, parse_word("100"), Fraction(1, 3))
        assert rep.threshold == 0
        assert w.to_string() == "011"

    def test_codeword_stays(self, tri3):
        w, rep = flip_round(tri3, parse_word("111"), Fraction(1, 10))
        assert w.to_string() == "111" and rep.flipped == ()

    def test_tri3_example(self, tri3):
        w, rep = flip_round(tri3, parse_word("110"), Fraction(1, 10))
        assert rep.threshold == Fraction(7, 5)
        assert rep.flipped == (2,)
        assert w.to_string() == "111"

    def test_error_reduction_claim(self, decode_instances):
        # in the flip branch with a correctly bracketed guess, one round
        # removes at least a beta fraction of the errors; at alpha*N = 2 the
        # precondition |F| <= (1-eps)*alpha*N covers exactly the singletons
        for inst in decode_instances:
            g, eps = inst.graph, inst.eps
            beta = Fraction(1, 4) - eps
            sched = GuessSchedule.for_beta(beta)
            cutoff = Fraction(2, 3) * eps + sched.eta
            for i in range(g.n_left):
                gamma_f = collisions(g, [i]).gamma
                gamma_i = (gamma_f // sched.eta + 1) * sched.eta
                assert gamma_f >= gamma_i - sched.eta and gamma_f < gamma_i
                if gamma_i >= cutoff:
                    continue
                word, _ = flip_round(g, Word.from_support(g.n_left, [i]), gamma_i)
                assert word.weight() <= (1 - beta) * 1


class TestViderman:
    def test_error_free(self, decode_instances):
        inst = decode_instances[0]
        out = viderman_decode(inst.graph, Word.zero(inst.graph.n_left), inst.params)
        assert out.ok and out.corrected == 0

    def test_tri3_example_with_caller_radius(self, tri3):
        params = ExpanderParams(Fraction(1, 3), Fraction(1, 10))
        out = viderman_decode(tri3, parse_word("100"), params, radius=1)
        assert out.ok and out.word.to_string() == "000"

    def test_tri3_default_radius_below_one_rejects(self, tri3):
        # baseline radius (1-3e)/(1-2e)*floor(alpha*N) = 7/8 < 1 here
        params = ExpanderParams(Fraction(1, 3), Fraction(1, 10))
        out = viderman_decode(tri3, parse_word("100"), params)
        assert out.radius == Fraction(7, 8)
        assert not out.ok and out.reason == "radius-exceeded"

    def test_all_single_errors_recovered(self, decode_instances):
        for inst in decode_instances[:3]:
            g = inst.graph
            assert (1 - 3 * inst.eps) / (1 - 2 * inst.eps) * inst.alpha_n >= 1
            planted = sample_codeword(g, 9)
            for i in range(g.n_left):
                out = viderman_decode(g, plant_errors(planted, [i]), inst.params)
                assert out.ok and out.word == planted

    def test_eps_above_third_needs_explicit_radius(self, tri3):
        params = ExpanderParams(Fraction(1, 3), Fraction(2, 5))
        with pytest.raises(InvalidParameters):
            viderman_decode(tri3, parse_word("100"), params)


class TestGuessSchedule:
    def test_defaults(self):
        sched = GuessSchedule.for_beta(Fraction(1, 12))
        assert sched.eta == Fraction(1, 1200)
        assert sched.gammas[0] == sched.eta
        assert sched.gammas[-1] >= 1
        assert len(sched.gammas) == 1200
        import math

        assert sched.ell >= math.ceil(math.log(1 / 3) / math.log(1 - 1 / 12))

    def test_ell_floor_enforced(self):
        with pytest.raises(InvalidParameters):
            GuessSchedule.for_beta(Fraction(1, 12), ell=2)


class TestGuessFlip:
    def test_error_free(self, decode_instances):
        inst = decode_instances[0]
        beta = Fraction(1, 4) - inst.eps
        out = guess_flip_decode(inst.graph, Word.zero(inst.graph.n_left), inst.params, beta)
        assert out.ok and out.corrected == 0

    def test_declared_radius(self, decode_instances):
        inst = decode_instances[0]
        beta = Fraction(1, 4) - inst.eps
        out = guess_flip_decode(inst.graph, Word.zero(inst.graph.n_left), inst.params, beta)
        assert out.radius == (1 - inst.eps) * 2

    def test_precondition(self, decode_instances):
        inst = decode_instances[0]
        with pytest.raises(InvalidParameters):
            guess_flip_decode(
                inst.graph, Word.zero(inst.graph.n_left), inst.params,
                beta=Fraction(1, 4) - inst.eps + Fraction(1, 100),
            )

    def test_adversarial_half_weight_pattern(self, decode_instances):
        # plant more than distance/2 errors along a min-weight codeword: the
        # decoder may return the other codeword, but the outcome contract
        # (zero syndrome, inside the validated radius) must hold
        inst = decode_instances[0]
        g = inst.graph
        beta = Fraction(1, 4) - inst.eps
        witness = min_distance_bruteforce(g).witness
        half = witness.support()[: inst.distance // 2 + 1]
        y = Word.from_support(g.n_left, half)
        out = guess_flip_decode(g, y, inst.params, beta)
        if out.ok:
            assert syndrome(g, out.word).is_zero
            assert y.distance(out.word) <= out.radius


class TestScaledGuessFlip:
    def test_uses_cap_not_optimum(self, decode_instances):
        # the error-count optimum of (1-k*eps)*k sits at k = 1/(2*eps); the
        # procedure must use k = (1/4-beta)/eps instead
        inst = decode_instances[0]
        out = scaled_guess_flip_decode(
            inst.graph, Word.zero(inst.graph.n_left), inst.params, Fraction(1, 100)
        )
        k = (Fraction(1, 4) - Fraction(1, 100)) / inst.eps
        assert f"k={k}" == out.path
        assert out.radius == (1 - k * inst.eps) * k * inst.params.alpha * inst.graph.n_left

    def test_radius_approaches_three_sixteenths(self):
        # at eps = 1/8 and beta -> 0 the scaled radius approaches
        # 3/(16*eps)*alpha*N = 1.5*alpha*N
        eps = Fraction(1, 8)
        alpha = Fraction(2, 10)
        n = 10
        for beta in (Fraction(1, 100), Fraction(1, 1000)):
            k = (Fraction(1, 4) - beta) / eps
            radius = (1 - k * eps) * k * alpha * n
            target = Fraction(3, 16) / eps * alpha * n
            assert target - radius <= 8 * beta * alpha * n
            assert radius < target

    def test_fallback_when_k_below_one(self, decode_instances):
        inst = decode_instances[0]
        # eta this large drives k = (1/4 - eta)/eps below 1
        eta = Fraction(1, 4) - inst.eps + Fraction(1, 50)
        out = scaled_guess_flip_decode(
            inst.graph, Word.zero(inst.graph.n_left), inst.params, eta
        )
        assert out.path == "unscaled-fallback"
        assert out.ok
        # the fallback radius is the unscaled (1-eps)*alpha*N
        assert out.radius == (1 - inst.eps) * inst.params.alpha * inst.graph.n_left

    def test_single_errors_recovered(self, decode_instances):
        inst = decode_instances[2]
        g = inst.graph
        planted = sample_codeword(g, 4)
        for i in range(0, g.n_left, 3):
            out = scaled_guess_flip_decode(
                g, plant_errors(planted, [i]), inst.params, Fraction(1, 100)
            )
            assert out.ok and out.word == planted


class TestGuessExpansion:
    def test_requires_small_eps(self, decode_instances):
        inst = decode_instances[0]  # eps = 1/6 > 1/8
        with pytest.raises(InvalidParameters):
            guess_expansion_decode_poly(inst.graph, Word.zero(inst.graph.n_left), inst.params)

    def test_error_free(self, guess_expansion_instance):
        inst = guess_expansion_instance
        out = guess_expansion_decode_poly(inst.graph, Word.zero(inst.graph.n_left), inst.params)
        assert out.ok and out.corrected == 0
        out = guess_expansion_decode_grid(
            inst.graph, Word.zero(inst.graph.n_left), inst.params, Fraction(1, 10)
        )
        assert out.ok and out.corrected == 0

    def test_accept_radius_at_eighth(self, guess_expansion_instance):
        # (1-2*eps)/(4*eps) = 3/2 at eps = 1/8, so the validated radius is
        # 1.5 * alpha * N
        inst = guess_expansion_instance
        assert inst.eps == Fraction(1, 8)
        out = guess_expansion_decode_poly(inst.graph, Word.zero(inst.graph.n_left), inst.params)
        assert out.radius == Fraction(3, 2) * inst.params.alpha * inst.graph.n_left

    def test_exhaustive_recovery_to_achieved_radius(self, guess_expansion_instance):
        # the formula radius is 3 here, but distance 8 equals the headline
        # bound with no slack room: radius 2 is the certified desk-scale
        # radius and must be exhaustively clean
        inst = guess_expansion_instance
        g = inst.graph
        achieved = min((inst.distance - 1) // 2, 2)
        planted = min_distance_bruteforce(g).witness
        for r in range(achieved + 1):
            for pat in itertools.combinations(range(g.n_left), r):
                y = plant_errors(planted, pat)
                out = guess_expansion_decode_poly(g, y, inst.params)
                assert out.ok and out.word == planted, (r, pat)

    def test_grid_success_implies_poly_success(self, guess_expansion_instance):
        inst = guess_expansion_instance
        g = inst.graph
        rng = random.Random(0)
        for _ in range(40):
            r = rng.randint(0, 3)
            y = plant_errors(Word.zero(g.n_left), rng.sample(range(g.n_left), r))
            grid = guess_expansion_decode_grid(g, y, inst.params, Fraction(1, 10))
            if grid.ok:
                poly = guess_expansion_decode_poly(g, y, inst.params)
                assert poly.ok

    def test_grid_enumeration_size_contract(self):
        import math

        eps = Fraction(1, 8)
        eta_prime = Fraction(1, 10)
        values = grid_guess_values(eps, eta_prime)
        eta = eps * eta_prime
        assert len(values) == math.ceil(1 / eta) + 1
        assert values[0] == 0 and values[1] == eta

    def test_conjunctive_branch_guard(self, guess_expansion_instance):
        # gamma*x >= eps alone with x < 1 must stay on the plain branch:
        # every successful single-error decode reports a plain-branch guess
        # with x < 1 or a sqrt-branch guess with x >= 1
        inst = guess_expansion_instance
        g = inst.graph
        out = guess_expansion_decode_poly(g, plant_errors(Word.zero(g.n_left), [0]), inst.params)
        assert out.ok
        if out.guess.branch == "sqrt":
            assert out.guess.x >= 1


class TestOutcomeContract:
    def test_success_implies_zero_syndrome_within_radius(self, decode_instances):
        inst = decode_instances[0]
        g = inst.graph
        beta = Fraction(1, 4) - inst.eps
        rng = random.Random(5)
        for trial in range(40):
            y = Word(g.n_left, rng.getrandbits(g.n_left))
            for out in (
                viderman_decode(g, y, inst.params),
                guess_flip_decode(g, y, inst.params, beta),
                scaled_guess_flip_decode(g, y, inst.params, Fraction(1, 100)),
                flip_decode_ss(g, y, Fraction(2, 3)),
                fixed_find_and_decode(g, y, inst.params),
            ):
                assert isinstance(out, DecodeOutcome)
                if out.ok:
                    assert syndrome(g, out.word).is_zero
                    if out.radius is not None:
                        assert y.distance(out.word) <= out.radius

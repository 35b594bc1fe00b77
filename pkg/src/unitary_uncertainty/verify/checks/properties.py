"""Built-in property checks run by the verification suite."""

from __future__ import annotations

import math
from typing import Callable, List, Optional, Tuple

import numpy as np

from unitary_uncertainty.core.errors import DegenerateVarianceError
from unitary_uncertainty.core.models import BoundName, SignChoice, SignPolicy
from unitary_uncertainty.core.tolerances import Tolerances
from unitary_uncertainty.limit.hermitian import hermitian_truncated_relations
from unitary_uncertainty.linalg.ops import complete_complement
from unitary_uncertainty.linalg.sampling import (
    complement_vectors,
    disk_matrices,
    haar_states,
    haar_unitaries,
    hermitian_matrices,
    random_complement,
    random_hermitian,
    random_operator,
    random_pure_state,
    random_unitary,
)
from unitary_uncertainty.linalg.types import ComplementBasis, Operator, PureState
from unitary_uncertainty.operators.dft import commutation_phase, dft_pair, k_from_phase
from unitary_uncertainty.uncertainty.baselines import bpuur1_bound, bpuur2_bound, buur_bound, msuur_check
from unitary_uncertainty.uncertainty.equalities import perpendicular_terms, product_equality_rhs, sum_equality_rhs
from unitary_uncertainty.uncertainty.hierarchy import (
    brute_force_subset_max,
    hierarchical_product_bound,
    hierarchical_sum_bound,
    top_n_subset,
)
from unitary_uncertainty.uncertainty.kernels import (
    apply_batch,
    hermitian_quotient_parts,
    hermitian_sum_values,
    product_rhs_values,
    sum_rhs_values,
    unitary_variance_values,
    variance_values,
)
from unitary_uncertainty.uncertainty.report import bpuur2_best_vector, full_report
from unitary_uncertainty.uncertainty.variance import covariance, general_variance, unitary_variance, visibility
from unitary_uncertainty.verify.base import BatchContext, TrialContext, TrialOutcome

Instance = Tuple[Operator, Operator, PureState, ComplementBasis]


def unitary_instance(ctx: TrialContext) -> Instance:
    u = random_unitary(ctx.dim, ctx.subseed(0), tol=ctx.tol)
    v = random_unitary(ctx.dim, ctx.subseed(1), tol=ctx.tol)
    psi = random_pure_state(ctx.dim, ctx.subseed(2), tol=ctx.tol)
    return u, v, psi, random_complement(psi, ctx.subseed(3), tol=ctx.tol)


def general_instance(ctx: TrialContext) -> Instance:
    a = random_operator(ctx.dim, ctx.subseed(0), tol=ctx.tol)
    b = random_operator(ctx.dim, ctx.subseed(1), tol=ctx.tol)
    psi = random_pure_state(ctx.dim, ctx.subseed(2), tol=ctx.tol)
    return a, b, psi, random_complement(psi, ctx.subseed(3), tol=ctx.tol)


def hermitian_instance(ctx: TrialContext) -> Instance:
    u = random_hermitian(ctx.dim, ctx.subseed(0), tol=ctx.tol)
    v = random_hermitian(ctx.dim, ctx.subseed(1), tol=ctx.tol)
    psi = random_pure_state(ctx.dim, ctx.subseed(2), tol=ctx.tol)
    return u, v, psi, random_complement(psi, ctx.subseed(3), tol=ctx.tol)


def _lhs_sum(a: Operator, b: Operator, psi: PureState, ctx: TrialContext) -> float:
    return general_variance(a, psi, tol=ctx.tol).value + general_variance(b, psi, tol=ctx.tol).value


def _lhs_prod(a: Operator, b: Operator, psi: PureState, ctx: TrialContext) -> float:
    return general_variance(a, psi, tol=ctx.tol).std * general_variance(b, psi, tol=ctx.tol).std


BatchInstance = Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]
Draw = Callable[[np.random.Generator, int, int], np.ndarray]


def batch_instance(ctx: BatchContext, draw: Draw) -> BatchInstance:
    """(psi, A psi, B psi, complement rows) for every trial of the batch."""
    rng = ctx.rng()
    a = draw(rng, ctx.trials, ctx.dim)
    b = draw(rng, ctx.trials, ctx.dim)
    psi = haar_states(rng, ctx.trials, ctx.dim)
    vectors = complement_vectors(rng, psi)
    return psi, apply_batch(a, psi), apply_batch(b, psi), vectors


def _variance_pair(raw_a: np.ndarray, raw_b: np.ndarray, tol: Tolerances) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Clamped variances and the mask of trials where either one is negative beyond eq_tol."""
    broken = (raw_a < -tol.eq_tol) | (raw_b < -tol.eq_tol)
    return np.maximum(raw_a, 0.0), np.maximum(raw_b, 0.0), broken


def _spreads(var_a: np.ndarray, var_b: np.ndarray, tol: Tolerances) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(dA, dB, degenerate); degenerate trials get unit spreads so the kernels stay finite."""
    degenerate = np.minimum(var_a, var_b) <= tol.degenerate_tol
    return np.sqrt(np.where(degenerate, 1.0, var_a)), np.sqrt(np.where(degenerate, 1.0, var_b)), degenerate


def batch_outcomes(
    residual: np.ndarray,
    threshold: float,
    *,
    broken: Optional[np.ndarray] = None,
    skipped: Optional[np.ndarray] = None,
) -> List[TrialOutcome]:
    outcomes = []
    for i, r in enumerate(residual.tolist()):
        if broken is not None and broken[i]:
            outcomes.append(TrialOutcome(passed=False, residual=math.inf, detail="NumericalInvariantError"))
        elif skipped is not None and skipped[i]:
            outcomes.append(TrialOutcome.skip("degenerate"))
        else:
            outcomes.append(TrialOutcome.within(math.inf if math.isnan(r) else r, threshold))
    return outcomes


def _sum_residual(psi: np.ndarray, a_psi: np.ndarray, b_psi: np.ndarray, vectors: np.ndarray, lhs: np.ndarray) -> np.ndarray:
    return np.max([np.abs(sum_rhs_values(psi, a_psi, b_psi, vectors, s.factor) - lhs) for s in SignChoice], axis=0)


def _product_batch(instance: BatchInstance, raw_a: np.ndarray, raw_b: np.ndarray, tol: Tolerances) -> List[TrialOutcome]:
    psi, a_psi, b_psi, vectors = instance
    var_a, var_b, broken = _variance_pair(raw_a, raw_b, tol)
    d_a, d_b, degenerate = _spreads(var_a, var_b, tol)
    residual = np.max(
        [np.abs(product_rhs_values(psi, a_psi, b_psi, vectors, s.factor, d_a, d_b) - d_a * d_b) for s in SignChoice],
        axis=0,
    )
    return batch_outcomes(residual, tol.eq_tol, broken=broken, skipped=degenerate)


class UnitarySumEqualityCheck:
    name = "unitary_sum_equality"
    min_dim = 2

    def run_batch(self, ctx: BatchContext) -> List[TrialOutcome]:
        psi, u_psi, v_psi, vectors = batch_instance(ctx, haar_unitaries)
        var_u, var_v, broken = _variance_pair(
            unitary_variance_values(psi, u_psi), unitary_variance_values(psi, v_psi), ctx.tol
        )
        residual = _sum_residual(psi, u_psi, v_psi, vectors, var_u + var_v)
        return batch_outcomes(residual, ctx.tol.eq_tol, broken=broken)


class UnitaryProductEqualityCheck:
    name = "unitary_product_equality"
    min_dim = 2

    def run_batch(self, ctx: BatchContext) -> List[TrialOutcome]:
        instance = batch_instance(ctx, haar_unitaries)
        psi, u_psi, v_psi, _ = instance
        return _product_batch(instance, unitary_variance_values(psi, u_psi), unitary_variance_values(psi, v_psi), ctx.tol)


class GeneralSumEqualityCheck:
    name = "general_sum_equality"
    min_dim = 2

    def run_batch(self, ctx: BatchContext) -> List[TrialOutcome]:
        psi, a_psi, b_psi, vectors = batch_instance(ctx, disk_matrices)
        var_a, var_b, broken = _variance_pair(variance_values(psi, a_psi), variance_values(psi, b_psi), ctx.tol)
        residual = _sum_residual(psi, a_psi, b_psi, vectors, var_a + var_b)
        return batch_outcomes(residual, ctx.tol.eq_tol, broken=broken)


class GeneralProductEqualityCheck:
    name = "general_product_equality"
    min_dim = 2

    def run_batch(self, ctx: BatchContext) -> List[TrialOutcome]:
        instance = batch_instance(ctx, disk_matrices)
        psi, a_psi, b_psi, _ = instance
        return _product_batch(instance, variance_values(psi, a_psi), variance_values(psi, b_psi), ctx.tol)


class HermitianSumEqualityCheck:
    name = "hermitian_sum_equality"
    min_dim = 2

    def run_batch(self, ctx: BatchContext) -> List[TrialOutcome]:
        psi, u_psi, v_psi, vectors = batch_instance(ctx, hermitian_matrices)
        var_u, var_v, broken = _variance_pair(variance_values(psi, u_psi), variance_values(psi, v_psi), ctx.tol)
        residual = np.max(
            [np.abs(hermitian_sum_values(u_psi, v_psi, vectors, s.factor) - (var_u + var_v)) for s in SignChoice],
            axis=0,
        )
        return batch_outcomes(residual, ctx.tol.eq_tol, broken=broken)


class HermitianProductEqualityCheck:
    """Quotient form of du dv, compared multiplied through by its denominator (whose magnitude is at most 1)."""

    name = "hermitian_product_equality"
    min_dim = 2

    def run_batch(self, ctx: BatchContext) -> List[TrialOutcome]:
        psi, u_psi, v_psi, vectors = batch_instance(ctx, hermitian_matrices)
        var_u, var_v, broken = _variance_pair(variance_values(psi, u_psi), variance_values(psi, v_psi), ctx.tol)
        d_u, d_v, skipped = _spreads(var_u, var_v, ctx.tol)
        residual = np.zeros(ctx.trials)
        for s in SignChoice:
            numerator, denominator = hermitian_quotient_parts(u_psi, v_psi, vectors, s.factor, d_u, d_v)
            skipped = skipped | (np.abs(denominator) <= ctx.tol.degenerate_tol)
            residual = np.maximum(residual, np.abs(numerator - denominator * d_u * d_v))
        return batch_outcomes(residual, ctx.tol.quotient_tol, broken=broken, skipped=skipped)


class HermitianTruncationCheck:
    name = "hermitian_truncations"
    min_dim = 2

    def run_trial(self, ctx: TrialContext) -> TrialOutcome:
        u, v, psi, basis = hermitian_instance(ctx)
        lhs_sum = _lhs_sum(u, v, psi, ctx)
        lhs_prod = _lhs_prod(u, v, psi, ctx)
        excess = 0.0
        for s in SignChoice:
            try:
                sum_bound, prod_bound = hermitian_truncated_relations(u, v, psi, basis.vectors[0], s, tol=ctx.tol)
            except DegenerateVarianceError:
                return TrialOutcome.skip("degenerate")
            excess = max(excess, sum_bound - lhs_sum - ctx.tol.eq_tol)
            if prod_bound is not None:
                excess = max(excess, prod_bound - lhs_prod - ctx.tol.quotient_tol)
        return TrialOutcome.within(max(excess, 0.0), 0.0)


class BasisIndependenceCheck:
    name = "basis_independence"
    min_dim = 2

    def run_trial(self, ctx: TrialContext) -> TrialOutcome:
        u, v, psi, basis = unitary_instance(ctx)
        other = complete_complement(psi, tol=ctx.tol)
        residual = 0.0
        for s in SignChoice:
            a = sum_equality_rhs(u, v, psi, basis, s, tol=ctx.tol).value
            b = sum_equality_rhs(u, v, psi, other, s, tol=ctx.tol).value
            residual = max(residual, abs(a - b))
            try:
                a = product_equality_rhs(u, v, psi, basis, s, tol=ctx.tol).value
                b = product_equality_rhs(u, v, psi, other, s, tol=ctx.tol).value
            except DegenerateVarianceError:
                continue
            residual = max(residual, abs(a - b))
        return TrialOutcome.within(residual, ctx.tol.eq_tol)


class PerpendicularTermsCheck:
    """Each summand is nonnegative and together they give <f|(1 - |psi><psi|)|f>."""

    name = "perpendicular_terms"
    min_dim = 2

    def run_trial(self, ctx: TrialContext) -> TrialOutcome:
        u, v, psi, basis = unitary_instance(ctx)
        residual = 0.0
        for s in SignChoice:
            terms = perpendicular_terms(u, v, psi, basis, s, tol=ctx.tol)
            if float(np.min(terms)) < 0.0:
                return TrialOutcome(passed=False, residual=-float(np.min(terms)))
            f = u.apply(psi) - 1j * s.factor * v.apply(psi)
            projected = float(np.vdot(f, f).real) - abs(np.vdot(psi.amplitudes, f)) ** 2
            residual = max(residual, abs(math.fsum(terms.tolist()) - projected))
        return TrialOutcome.within(residual, ctx.tol.eq_tol)


class HierarchyMonotonicityCheck:
    name = "hierarchy_monotonicity"
    min_dim = 2

    def run_trial(self, ctx: TrialContext) -> TrialOutcome:
        u, v, psi, basis = unitary_instance(ctx)
        orders = range(1, len(basis) + 1)
        lhs_sum = unitary_variance(u, psi, tol=ctx.tol).value + unitary_variance(v, psi, tol=ctx.tol).value
        residual = 0.0
        for s in SignChoice:
            sums = [hierarchical_sum_bound(u, v, psi, basis, n, s, tol=ctx.tol).value for n in orders]
            residual = max(residual, _monotone_gap(sums), abs(sums[-1] - lhs_sum))
            try:
                prods = [hierarchical_product_bound(u, v, psi, basis, n, s, tol=ctx.tol).value for n in orders]
            except DegenerateVarianceError:
                continue
            residual = max(residual, _monotone_gap(prods), abs(prods[-1] - _lhs_prod(u, v, psi, ctx)))
        return TrialOutcome.within(residual, ctx.tol.eq_tol)


def _monotone_gap(values: List[float]) -> float:
    return max([0.0] + [earlier - later for earlier, later in zip(values, values[1:])])


class SubsetOracleCheck:
    """Sorted-prefix maximizer against exhaustive enumeration; exhaustive only up to d = 6."""

    name = "subset_oracle"
    min_dim = 2
    max_dim = 6

    def run_trial(self, ctx: TrialContext) -> TrialOutcome:
        if ctx.dim > self.max_dim:
            return TrialOutcome.skip("dimension above enumeration limit")
        u, v, psi, basis = unitary_instance(ctx)
        residual = 0.0
        for s in SignChoice:
            terms = perpendicular_terms(u, v, psi, basis, s, tol=ctx.tol).tolist()
            for n in range(1, len(terms) + 1):
                fast_subset, fast = top_n_subset(terms, n)
                slow_subset, slow = brute_force_subset_max(terms, n)
                if fast_subset != slow_subset:
                    return TrialOutcome(passed=False, residual=abs(fast - slow), detail=f"subset mismatch at n={n}")
                residual = max(residual, abs(fast - slow))
        return TrialOutcome.within(residual, 0.0)


class BoundValidityCheck:
    name = "bound_validity"
    min_dim = 2

    def run_trial(self, ctx: TrialContext) -> TrialOutcome:
        u, v, psi, basis = unitary_instance(ctx)
        lhs_sum = unitary_variance(u, psi, tol=ctx.tol).value + unitary_variance(v, psi, tol=ctx.tol).value
        lhs_prod = unitary_variance(u, psi, tol=ctx.tol).value * unitary_variance(v, psi, tol=ctx.tol).value
        excess = [
            buur_bound(u, v, psi, tol=ctx.tol).value - lhs_prod,
            bpuur1_bound(u, v, psi, tol=ctx.tol).value - lhs_sum,
        ]
        for s in SignChoice:
            excess.append(bpuur2_bound(u, v, psi, basis.vectors[0], s, tol=ctx.tol).value - lhs_sum)
        return TrialOutcome.within(max(0.0, max(excess)), ctx.tol.eq_tol)


class Bpuur2TruncationCheck:
    """BPUUR2 on the best basis vector is the one-term hierarchical bound."""

    name = "bpuur2_truncation"
    min_dim = 2

    def run_trial(self, ctx: TrialContext) -> TrialOutcome:
        u, v, psi, basis = unitary_instance(ctx)
        residual = 0.0
        for s in SignChoice:
            a = bpuur2_best_vector(u, v, psi, basis, s, tol=ctx.tol).value
            b = hierarchical_sum_bound(u, v, psi, basis, 1, s, tol=ctx.tol).value
            residual = max(residual, abs(a - b))
        return TrialOutcome.within(residual, ctx.tol.eq_tol)


class MsuurValidityCheck:
    """Massar-Spindel relation on randomly rotated clock/shift pairs, which keep UV = wVU."""

    name = "msuur_validity"
    min_dim = 2

    def run_trial(self, ctx: TrialContext) -> TrialOutcome:
        pair = dft_pair(ctx.dim, tol=ctx.tol)
        w = random_unitary(ctx.dim, ctx.subseed(0), tol=ctx.tol).entries
        u = Operator.unitary(w @ pair.clock.entries @ w.conj().T, tol=ctx.tol)
        v = Operator.unitary(w @ pair.shift.entries @ w.conj().T, tol=ctx.tol)
        psi = random_pure_state(ctx.dim, ctx.subseed(1), tol=ctx.tol)
        k = k_from_phase(commutation_phase(u, v, tol=ctx.tol), tol=ctx.tol)
        check = msuur_check(u, v, psi, k, tol=ctx.tol)
        tested = check.residual if check.value is None else check.value
        return TrialOutcome(passed=check.holds, residual=max(0.0, -tested))


class CovarianceSymmetryCheck:
    name = "covariance_symmetry"
    min_dim = 2

    def run_trial(self, ctx: TrialContext) -> TrialOutcome:
        u, _, psi, _ = unitary_instance(ctx)
        a, b, _, _ = general_instance(ctx)
        self_cov = covariance(u, u, psi, tol=ctx.tol)
        residual = max(
            abs(self_cov.imag),
            abs(self_cov.real - unitary_variance(u, psi, tol=ctx.tol).value),
            abs(covariance(a, b, psi, tol=ctx.tol).value - covariance(b, a, psi, tol=ctx.tol).value.conjugate()),
        )
        return TrialOutcome.within(residual, ctx.tol.orth_tol)


class PhaseInvarianceCheck:
    name = "phase_invariance"
    min_dim = 2

    def run_trial(self, ctx: TrialContext) -> TrialOutcome:
        u, v, psi, basis = unitary_instance(ctx)
        alpha = float(np.random.default_rng(ctx.subseed(4)).uniform(-math.pi, math.pi))
        shifted = psi.phase_shifted(alpha)
        orders = list(range(1, len(basis) + 1))
        before = full_report(u, v, psi, basis, orders, sign_policy=SignPolicy.PLUS, tol=ctx.tol)
        after = full_report(u, v, shifted, basis, orders, sign_policy=SignPolicy.PLUS, tol=ctx.tol)
        if [b.label for b in before.bounds] != [b.label for b in after.bounds]:
            return TrialOutcome(passed=False, residual=math.inf, detail="bound sets differ")
        residual = max(
            [
                abs(before.dU2.value - after.dU2.value),
                abs(before.dV2.value - after.dV2.value),
                abs(abs(before.cov) - abs(after.cov)),
            ]
            + [abs(x.value - y.value) for x, y in zip(before.bounds, after.bounds)]
        )
        return TrialOutcome.within(residual, ctx.tol.eq_tol)


class VarianceCodePathsCheck:
    """1 - |<U>|^2 against <U^dag U> - |<U>|^2, and visibility^2 = 1 - dU^2."""

    name = "variance_code_paths"
    min_dim = 2

    def run_trial(self, ctx: TrialContext) -> TrialOutcome:
        u, v, psi, _ = unitary_instance(ctx)
        residual = 0.0
        for op in (u, v):
            short = unitary_variance(op, psi, tol=ctx.tol).value
            residual = max(
                residual,
                abs(short - general_variance(op, psi, tol=ctx.tol).value),
                abs(visibility(op, psi, tol=ctx.tol) ** 2 - (1.0 - short)),
            )
        return TrialOutcome.within(residual, ctx.tol.eq_tol)


class FullReportConsistencyCheck:
    """Every bound in a full report sits below its left-hand side."""

    name = "report_consistency"
    min_dim = 2

    def run_trial(self, ctx: TrialContext) -> TrialOutcome:
        u, v, psi, basis = unitary_instance(ctx)
        rep = full_report(u, v, psi, basis, list(range(1, len(basis) + 1)), tol=ctx.tol)
        excess = 0.0
        for b in rep.bounds:
            if b.name in (BoundName.UURP_N, BoundName.UUEP_RHS):
                lhs = math.sqrt(rep.lhs_prod)
            elif b.name is BoundName.BUUR:
                lhs = rep.lhs_prod
            else:
                lhs = rep.lhs_sum
            excess = max(excess, b.value - lhs)
        return TrialOutcome.within(excess, ctx.tol.eq_tol)

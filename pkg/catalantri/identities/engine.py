"""
Verification engine: evaluates registered identities over parameter
boxes and reports the first counterexample, if any.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from catalantri.core.exact import Scalar, format_scalar
from catalantri.exceptions import DomainError
from catalantri.identities.registry import REGISTRY, get_identity
from catalantri.models.schema import Counterexample, IdentityDescriptor, VerificationReport

logger = logging.getLogger(__name__)

Box = Mapping[str, Iterable[Scalar]]


def resolve_box(
    descriptor: IdentityDescriptor,
    box: Optional[Box] = None,
    max_size: Optional[int] = None,
) -> Dict[str, Tuple[Scalar, ...]]:
    """
    Values to check for every parameter of an identity.

    Parameters missing from the box take their declared defaults. When
    max_size is given, integer parameters keep only values <= max_size.

    Raises:
        DomainError: if the box names an undeclared parameter or holds a
            value outside a parameter's declared domain
    """
    box = dict(box or {})
    unknown = sorted(set(box) - set(descriptor.param_names))
    if unknown:
        raise DomainError(
            f"{descriptor.id} has no parameter(s) {', '.join(unknown)}; "
            f"it takes {', '.join(descriptor.param_names)}"
        )

    resolved: Dict[str, Tuple[Scalar, ...]] = {}
    for spec in descriptor.params:
        values = tuple(box[spec.name]) if spec.name in box else spec.default
        for value in values:
            if not spec.admits(value):
                raise DomainError(
                    f"{descriptor.id}: {spec.name}={format_scalar(value)} "
                    f"is outside the domain of the identity"
                )
        if max_size is not None and not spec.rational:
            values = tuple(v for v in values if v <= max_size)
        resolved[spec.name] = values
    return resolved


def describe_values(values: Sequence[Scalar]) -> str:
    """'0..25' for a run of consecutive integers, else a comma list."""
    if not values:
        return ""
    if all(isinstance(v, int) for v in values) and len(values) > 2:
        lo, hi = min(values), max(values)
        if list(values) == list(range(lo, hi + 1)):
            return f"{lo}..{hi}"
    return ",".join(format_scalar(v) for v in values)


def _counterexample(
    args: Mapping[str, Scalar], lhs: Scalar, rhs: Scalar, note: Optional[str] = None
) -> Counterexample:
    return Counterexample(
        params={k: format_scalar(v) for k, v in args.items()},
        lhs=format_scalar(lhs),
        rhs=format_scalar(rhs),
        note=note,
    )


def verify(
    identity_id: str, box: Optional[Box] = None, max_size: Optional[int] = None
) -> VerificationReport:
    """
    Check one identity on every admissible point of a parameter box.

    Points failing the identity's cross-parameter constraint are skipped
    and not counted. Evaluation stops at the first mismatch, either
    between the two sides or in a tail that should vanish.

    Args:
        identity_id: Registry id, e.g. ``shapiro_convolution``
        box: Values per parameter name; missing names use the defaults
        max_size: Optional cap on integer parameter values

    Returns:
        VerificationReport with the case count and any counterexample

    Raises:
        UnknownIdentityError: if the id is not registered
        DomainError: if the box leaves the declared domain
    """
    descriptor = get_identity(identity_id)
    resolved = resolve_box(descriptor, box, max_size)
    domain = {name: describe_values(values) for name, values in resolved.items()}
    names = descriptor.param_names

    logger.debug("verifying %s over %s", identity_id, domain)
    cases = 0
    for point in product(*(resolved[name] for name in names)):
        args = dict(zip(names, point))
        if descriptor.constraint is not None and not descriptor.constraint(args):
            continue
        cases += 1

        lhs, rhs = descriptor.lhs(args), descriptor.rhs(args)
        failure = None
        if lhs != rhs:
            failure = _counterexample(args, lhs, rhs)
        elif descriptor.tail is not None:
            tail = descriptor.tail(args)
            if tail != 0:
                failure = _counterexample(
                    args, tail, 0, note="terms past the summation limit do not vanish"
                )

        if failure is not None:
            logger.info("%s: counterexample after %d cases at %s", identity_id, cases, failure.params)
            return VerificationReport(
                id=identity_id, domain=domain, passed=False, cases=cases,
                counterexample=failure, statement=descriptor.statement,
            )

    logger.info("%s: %d cases pass", identity_id, cases)
    return VerificationReport(
        id=identity_id, domain=domain, passed=True, cases=cases,
        statement=descriptor.statement,
    )


def verify_all(
    boxes: Optional[Mapping[str, Box]] = None,
    ids: Optional[Sequence[str]] = None,
    max_workers: int = 1,
    max_size: Optional[int] = None,
) -> List[VerificationReport]:
    """
    Verify several identities, returning reports in registry order.

    Args:
        boxes: Optional per-identity boxes, keyed by id
        ids: Identities to check (all registered ones if not provided)
        max_workers: Worker threads; 1 runs sequentially
        max_size: Optional cap on integer parameter values

    Returns:
        One report per identity
    """
    boxes = boxes or {}
    ids = list(ids) if ids is not None else list(REGISTRY)
    for identity_id in ids:
        get_identity(identity_id)

    def run(identity_id: str) -> VerificationReport:
        return verify(identity_id, boxes.get(identity_id), max_size)

    if max_workers <= 1:
        reports = [run(identity_id) for identity_id in ids]
    else:
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            reports = list(executor.map(run, ids))

    failed = [r.id for r in reports if not r.passed]
    logger.info("verified %d identities, %d failed", len(reports), len(failed))
    return reports


def polynomial_mismatch(
    lhs: Callable[[Mapping[str, Scalar]], Scalar],
    rhs: Callable[[Mapping[str, Scalar]], Scalar],
    degree_bound: int,
    variables: Sequence[str] = ("x", "y"),
    fixed: Optional[Mapping[str, Scalar]] = None,
) -> Optional[Dict[str, Scalar]]:
    """
    First point of the grid {0..degree_bound}^v where the two sides differ.

    Returns:
        The full parameter mapping at that point, or None if they agree
        everywhere on the grid

    Raises:
        DomainError: if degree_bound is negative
    """
    if degree_bound < 0:
        raise DomainError(f"degree bound must be non-negative, got {degree_bound}")
    fixed = dict(fixed or {})
    grid = range(degree_bound + 1)
    for point in product(grid, repeat=len(variables)):
        args = {**fixed, **dict(zip(variables, point))}
        if lhs(args) != rhs(args):
            logger.debug("polynomials differ at %s", args)
            return args
    return None


def polynomial_identity_check(
    lhs: Callable[[Mapping[str, Scalar]], Scalar],
    rhs: Callable[[Mapping[str, Scalar]], Scalar],
    degree_bound: int,
    variables: Sequence[str] = ("x", "y"),
    fixed: Optional[Mapping[str, Scalar]] = None,
) -> bool:
    """
    Decide whether two polynomials agree identically.

    Two polynomials whose degree in each variable is at most degree_bound
    are equal exactly when they agree on the grid {0..degree_bound}^v.

    Args:
        lhs: Callable taking a parameter mapping
        rhs: Callable taking a parameter mapping
        degree_bound: Upper bound on the degree in each variable
        variables: Names of the polynomial variables
        fixed: Values for the remaining (non-polynomial) parameters

    Returns:
        True when both sides agree at every grid point
    """
    return polynomial_mismatch(lhs, rhs, degree_bound, variables, fixed) is None


def certify(
    identity_id: str, box: Optional[Box] = None, max_size: Optional[int] = None
) -> VerificationReport:
    """
    Certify an identity as a polynomial identity in its rational parameters.

    For every admissible assignment of the integer parameters, both sides
    are compared on a grid large enough to decide equality of polynomials
    of the registered degree bound. Values given for rational parameters
    in the box are validated but not used.

    Returns:
        A report with id ``<identity_id>_polynomial``; cases counts the
        integer assignments certified

    Raises:
        UnknownIdentityError: if the id is not registered
        DomainError: if the identity has no degree bound or the box leaves
            the declared domain
    """
    descriptor = get_identity(identity_id)
    if descriptor.degree_bound is None:
        raise DomainError(f"{identity_id} has no polynomial degree bound to certify against")
    resolved = resolve_box(descriptor, box, max_size)
    variables = descriptor.rational_names
    integers = [name for name in descriptor.param_names if name not in variables]
    report_id = f"{identity_id}_polynomial"
    domain = {name: describe_values(resolved[name]) for name in integers}

    cases = 0
    for point in product(*(resolved[name] for name in integers)):
        fixed = dict(zip(integers, point))
        # the constraint only ever involves integer parameters
        sample = {**fixed, **{name: 0 for name in variables}}
        if descriptor.constraint is not None and not descriptor.constraint(sample):
            continue
        cases += 1
        bound = descriptor.degree_bound(sample)
        mismatch = polynomial_mismatch(descriptor.lhs, descriptor.rhs, bound, variables, fixed)
        if mismatch is not None:
            logger.info("%s: sides differ at %s", report_id, mismatch)
            return VerificationReport(
                id=report_id, domain=domain, passed=False, cases=cases,
                counterexample=_counterexample(
                    mismatch, descriptor.lhs(mismatch), descriptor.rhs(mismatch),
                    note=f"polynomials of degree <= {bound} differ",
                ),
                statement=descriptor.statement,
            )

    logger.info("%s: %d integer assignments certified", report_id, cases)
    return VerificationReport(
        id=report_id, domain=domain, passed=True, cases=cases,
        statement=descriptor.statement,
    )

"""Randomized invariant checks shared by the unit and acceptance suites.

Each ``*_instance(seed)`` builds one random instance and returns a dict
mapping invariant name to ``True`` (held), ``False`` (violated) or
``None`` (premise not met on this instance, so nothing to check).
"""

from __future__ import annotations

import random
from fractions import Fraction as Q

from martkit.condexp import cond_exp, cond_exp_indep, cond_exp_pull_out, has_cond_exp
from martkit.martingale import (
    check_difference,
    check_pairwise,
    check_set_integral,
    check_succ,
    cond_exp_process,
    is_martingale,
    is_submartingale,
    is_supermartingale,
    transform,
)
from martkit.measure import (
    MeasureSpace,
    ae_eq,
    ae_ge,
    ae_le,
    averaging_oracle,
    const_table,
    density_report,
    integral,
    norm_table,
    set_integral,
)
from martkit.numeric import l1_norm, vadd, vscale, vsub
from martkit.process import (
    Filtration,
    ProcessTable,
    is_adapted,
    is_predictable,
    is_predictable_shifted,
    is_progressive,
    natural_filtration,
    p_add,
    p_compose,
    p_max,
    p_neg,
    p_scale,
    p_sub,
)
from martkit.sigma import Partition, is_measurable_fn, is_measurable_set, predictable_sigma, refines
from martkit.testing import (
    random_adapted_process,
    random_drift,
    random_filtration,
    random_martingale,
    random_measurable_table,
    random_partition,
    random_predictable_process,
    random_rat,
    random_refinement,
    random_space,
    random_table,
    random_weights,
)

from oracles import (
    algebra_of,
    all_subsets,
    level_set_cond_exp,
    predictable_generators,
    sigma_closure,
    split_atoms,
)

LITERAL_CLOSURE_MAX_ATOMS = 8


def _implies(premise: bool, conclusion) -> bool | None:
    return bool(conclusion) if premise else None


# conditional expectation ---------------------------------------------------


def _product_space(rng: random.Random):
    """Two independent coordinates: outcome ``i * b + j`` has weight ``p_i * q_j``."""
    a, b = rng.choice([(1, 2), (2, 2), (2, 3), (3, 2), (2, 4), (4, 2), (1, 4), (4, 1)])
    p, q = random_weights(rng, a), random_weights(rng, b)
    m = MeasureSpace([p[i] * q[j] for i in range(a) for j in range(b)])
    first = Partition(a * b, [[i * b + j for j in range(b)] for i in range(a)])
    second = Partition(a * b, [[i * b + j for i in range(a)] for j in range(b)])
    return m, first, second


def condexp_instance(seed: int) -> dict:
    rng = random.Random(seed)
    n, d = rng.randint(1, 8), rng.randint(1, 3)
    m = random_space(rng, n, probability=rng.random() < 0.85)
    F = random_partition(rng, n)
    G = random_refinement(rng, F, 0.6)
    x, y = random_table(rng, n, d), random_table(rng, n, d)
    ce = cond_exp(m, F, x)
    res = {}

    res["existence"] = has_cond_exp(m, F, x, ce.table)
    res["matches_level_set_formula"] = ce.table == level_set_cond_exp(m.weights, F.atoms, x)
    res["measurable"] = is_measurable_fn(F, ce.table) and all(
        all(a == 0 for a in ce.table[a_[0]]) for a_ in ce.null_atoms
    )

    # uniqueness: candidates that differ on null atoms pass the defining property,
    # a random measurable table usually fails it
    altered = list(ce.table)
    for atom in ce.null_atoms:
        v = tuple(random_rat(rng) for _ in range(d))
        for w in atom:
            altered[w] = v
    altered = tuple(altered)
    other = altered if rng.random() < 0.5 else random_measurable_table(rng, F, d)
    res["uniqueness_null_modification"] = has_cond_exp(m, F, x, altered) and ae_eq(m, altered, ce.table)
    res["uniqueness"] = _implies(has_cond_exp(m, F, x, other), ae_eq(m, other, ce.table))

    xm = random_measurable_table(rng, F, d)
    res["identity"] = ae_eq(m, cond_exp(m, F, xm).table, xm)

    a, b = random_rat(rng), random_rat(rng)
    combo = tuple(vadd(vscale(a, u), vscale(b, v)) for u, v in zip(x, y))
    cy = cond_exp(m, F, y).table
    res["linearity"] = ae_eq(
        m, cond_exp(m, F, combo).table, tuple(vadd(vscale(a, u), vscale(b, v)) for u, v in zip(ce.table, cy))
    )

    res["tower"] = ae_eq(m, cond_exp(m, F, cond_exp(m, G, x).table).table, ce.table)

    cn = cond_exp(m, F, norm_table(x)).table
    res["pointwise_contraction"] = all(l1_norm(ce.table[w]) <= cn[w][0] for w in m.support())
    res["l1_contraction"] = integral(m, norm_table(ce.table))[0] <= integral(m, norm_table(x))[0]

    # order bounds on the first component
    xs = tuple((v[0],) for v in x)
    c = random_rat(rng)
    above = tuple((c + abs(v[0]),) for v in x)
    strictly = tuple((c + abs(v[0]) + Q(1, 7),) for v in x)
    below = tuple((v[0] - abs(random_rat(rng)),) for v in xs)
    cc = const_table(n, c)
    res["order_lower_bound"] = _implies(ae_ge(m, above, cc), ae_ge(m, cond_exp(m, F, above).table, cc))
    res["order_lower_bound_random"] = _implies(ae_ge(m, xs, cc), ae_ge(m, cond_exp(m, F, xs).table, cc))
    strict_ce = cond_exp(m, F, strictly)
    positive = [w for atom in F.atoms if sum(m.weights[u] for u in atom) > 0 for w in atom if m.weights[w] > 0]
    res["order_strict"] = _implies(
        all(strictly[w][0] > c for w in m.support()), all(strict_ce.table[w][0] > c for w in positive)
    )
    res["monotone"] = _implies(
        ae_ge(m, xs, below), ae_ge(m, cond_exp(m, F, xs).table, cond_exp(m, F, below).table)
    )

    s = random_measurable_table(rng, F, 1)
    pulled = cond_exp_pull_out(m, F, s, y)
    res["pull_out"] = ae_eq(m, pulled, tuple(vscale(si[0], v) for si, v in zip(s, cy)))

    pm, first, second = _product_space(rng)
    xi = random_measurable_table(rng, first, 1)
    trivial = Partition.trivial(pm.n)
    indep = cond_exp_indep(pm, trivial, second, xi)
    res["independence_trivial"] = ae_eq(pm, indep, const_table(pm.n, integral(pm, xi)))
    f_first = Partition(pm.n, [[w for a in group for w in a] for group in _group(rng, first.atoms)])
    with_f = cond_exp_indep(pm, f_first, second, xi)
    res["independence"] = ae_eq(pm, with_f, cond_exp(pm, f_first, xi).table)
    return res


def _group(rng: random.Random, atoms):
    """Randomly merge atoms into groups (a coarsening)."""
    k = rng.randint(1, len(atoms))
    groups: dict[int, list] = {}
    for a in atoms:
        groups.setdefault(rng.randrange(k), []).append(a)
    return list(groups.values())


# density and averaging -----------------------------------------------------


def density_instance(seed: int) -> dict:
    rng = random.Random(seed)
    n, d = rng.randint(1, 8), rng.randint(1, 3)
    m = random_space(rng, n, probability=rng.random() < 0.8)
    f = random_table(rng, n, d)
    g = tuple(v if rng.random() < 0.6 else random_table(rng, 1, d)[0] for v in f)
    zero = const_table(n, (0,) * d)
    res = {
        "density_unique": density_report(m, f, g) == ae_eq(m, f, g),
        "density_zero": density_report(m, f, zero) == ae_eq(m, f, zero),
        "density_self": density_report(m, f, f),
    }
    # f equal to zero off a random null set: the zero-density premise holds non-vacuously
    nulls = [w for w in range(n) if m.weights[w] == 0]
    h = tuple(v if w in nulls else (0,) * d for w, v in enumerate(f))
    res["density_zero_on_null_modification"] = density_report(m, h, zero) and ae_eq(m, h, zero)

    fs = tuple((v[0],) for v in f)
    nonneg_events = all(set_integral(m, a, fs)[0] >= 0 for a in all_subsets(n))
    res["density_nonneg"] = nonneg_events == ae_ge(m, fs, const_table(n, 0))
    fp = tuple((abs(v[0]),) for v in f)
    res["density_nonneg_positive_case"] = all(set_integral(m, a, fp)[0] >= 0 for a in all_subsets(n)) and ae_ge(
        m, fp, const_table(n, 0)
    )

    support_vals = [fs[w][0] for w in m.support()] or [Q(0)]
    lo, hi = min(support_vals), max(support_vals)
    points = {fs[w][0] for w in range(n) if rng.random() < 0.7}
    cut = random_rat(rng)
    predicates = {
        "hull": lambda v: lo <= v[0] <= hi,
        "points": lambda v: v[0] in points,
        "open_ray": lambda v: v[0] > cut,
        "ball": lambda v: l1_norm(vsub(v, f[0])) <= 2,
    }
    for name, member in predicates.items():
        target = fs if name != "ball" else f
        report = averaging_oracle(m, target, member)
        res[f"averaging_{name}"] = not (report.premise_holds and not report.conclusion_holds)
    return res


# process hierarchy ---------------------------------------------------------


def _random_process(rng: random.Random, f: Filtration, d: int) -> ProcessTable:
    kind = rng.choice(["adapted", "predictable", "arbitrary", "constant", "lagged"])
    n = f.n
    if kind == "adapted":
        return random_adapted_process(rng, f, d)
    if kind == "predictable":
        return random_predictable_process(rng, f, d)
    if kind == "constant":
        v = tuple(random_rat(rng) for _ in range(d))
        return ProcessTable.constant(f.horizon, [v] * n)
    if kind == "lagged":
        # predictable except possibly at one time
        x = list(random_predictable_process(rng, f, d).tables)
        t = rng.randint(0, f.horizon)
        x[t] = random_measurable_table(rng, f[t], d)
        return ProcessTable(x)
    return ProcessTable([random_table(rng, n, d, -2, 2) for _ in range(f.horizon + 1)])


def process_instance(seed: int, closure_n: int = 5) -> dict:
    rng = random.Random(seed)
    n, horizon, d = rng.randint(1, 6), rng.randint(0, 4), rng.randint(1, 2)
    f = random_filtration(rng, n, horizon)
    x = _random_process(rng, f, d)
    adapted, progressive = is_adapted(x, f), is_progressive(x, f)
    predictable, shifted = is_predictable(x, f), is_predictable_shifted(x, f)
    res = {
        "predictable_implies_progressive": _implies(predictable, progressive),
        "progressive_implies_adapted": _implies(progressive, adapted),
        "adapted_iff_progressive": adapted == progressive,
        "predictable_iff_shifted": predictable == shifted,
    }
    nat = natural_filtration(x)
    res["natural_adapted"] = is_adapted(x, nat)
    res["natural_minimal"] = _implies(adapted, all(refines(f[t], nat[t]) for t in range(horizon + 1)))

    tp = predictable_sigma(f)
    full = tp.partition
    res["projection_time"] = all(
        is_measurable_set(full, {j * n + w for w in range(n)}) for j in range(horizon + 1)
    )
    res["projection_outcome"] = all(
        is_measurable_set(full, {j * n + w for j in range(horizon + 1) for w in a}) for a in f[0].atoms
    )

    if n <= closure_n:
        gens = predictable_generators(f.parts)
        res["sigma_p_split_closure"] = tuple(split_atoms((horizon + 1) * n, gens)) == tp.atoms
        if len(tp.atoms) <= LITERAL_CLOSURE_MAX_ATOMS:
            res["sigma_p_literal_closure"] = sigma_closure((horizon + 1) * n, gens) == algebra_of(tp.atoms)
        else:
            res["sigma_p_literal_closure"] = None
    else:
        res["sigma_p_split_closure"] = res["sigma_p_literal_closure"] = None

    y = random_adapted_process(rng, f, d)
    both = adapted
    c = random_rat(rng)
    res["closure_add"] = _implies(both, is_adapted(p_add(x, y), f))
    res["closure_scale"] = _implies(both, is_adapted(p_scale(c, x), f))
    res["closure_compose"] = _implies(
        both, is_adapted(p_compose(lambda t, v: (l1_norm(v) * (t + 1), v[0] - c), x), f)
    )
    return res


# martingales ---------------------------------------------------------------


def _random_scalar_process(rng: random.Random, m: MeasureSpace, f: Filtration) -> tuple[str, ProcessTable]:
    kind = rng.choice(["martingale", "sub", "super", "adapted", "predictable", "predictable_mart"])
    if kind == "martingale":
        return kind, random_martingale(rng, m, f)
    if kind == "sub":
        return kind, p_add(random_martingale(rng, m, f), random_drift(rng, f, 1))
    if kind == "super":
        return kind, p_add(random_martingale(rng, m, f), random_drift(rng, f, -1))
    if kind == "adapted":
        return kind, random_adapted_process(rng, f, 1)
    if kind == "predictable":
        return kind, random_predictable_process(rng, f, 1, -1, 1)
    # constant in time except on null atoms of the predictable slices
    x0 = random_measurable_table(rng, f[0], 1)
    tables = [x0]
    for t in range(f.horizon):
        table = list(x0)
        for atom in f[t].atoms:
            if sum(m.weights[w] for w in atom) == 0:
                v = (random_rat(rng),)
                for w in atom:
                    table[w] = v
        tables.append(table)
    return kind, ProcessTable(tables)


def martingale_instance(seed: int) -> dict:
    rng = random.Random(seed)
    n, horizon = rng.randint(1, 8), rng.randint(0, 5)
    m = random_space(rng, n)
    f = random_filtration(rng, n, horizon)
    kind, x = _random_scalar_process(rng, m, f)
    res = {}

    verdicts = {}
    for rel in ("eq", "le", "ge"):
        routes = {
            "pairwise": check_pairwise(m, f, x, rel),
            "successor": check_succ(m, f, x, rel),
            "set_integral": check_set_integral(m, f, x, rel),
            "set_integral_successor": check_set_integral(m, f, x, rel, successor=True),
            "difference": check_difference(m, f, x, rel),
        }
        res[f"four_way_{rel}"] = len(set(routes.values())) == 1
        verdicts[rel] = routes["pairwise"]
    mart, sub, sup = verdicts["eq"], verdicts["le"], verdicts["ge"]
    res["martingale_iff"] = mart == (sub and sup)
    res["constructed_class"] = {
        "martingale": mart, "sub": sub, "super": sup, "predictable_mart": mart
    }.get(kind, True)

    # closure under the vector-space operations and max
    if mart:
        y = random_martingale(rng, m, f)
        c = random_rat(rng)
        res["mart_scale"] = is_martingale(m, f, p_scale(c, x))
        res["mart_add"] = is_martingale(m, f, p_add(x, y))
        res["mart_sub"] = is_martingale(m, f, p_sub(x, y))
        res["mart_neg"] = is_martingale(m, f, p_neg(x))
    else:
        res["mart_scale"] = res["mart_add"] = res["mart_sub"] = res["mart_neg"] = None
    if sub:
        y = p_add(random_martingale(rng, m, f), random_drift(rng, f, 1))
        c = abs(random_rat(rng))
        res["sub_add"] = is_submartingale(m, f, p_add(x, y))
        res["sub_scale_nonneg"] = is_submartingale(m, f, p_scale(c, x))
        res["sub_scale_nonpos_is_super"] = is_supermartingale(m, f, p_scale(-c, x))
        res["sub_max"] = is_submartingale(m, f, p_max(x, y))
        res["sub_max_zero"] = is_submartingale(m, f, p_max(x, 0))
    else:
        for key in ("sub_add", "sub_scale_nonneg", "sub_scale_nonpos_is_super", "sub_max", "sub_max_zero"):
            res[key] = None

    g = random_table(rng, n, 1)
    res["cond_exp_process_martingale"] = is_martingale(m, f, cond_exp_process(m, f, g))

    predictable = is_predictable(x, f)
    times = [(i, j) for i in range(horizon + 1) for j in range(i, horizon + 1)]
    res["predictable_martingale_constant"] = _implies(
        predictable and mart, all(ae_eq(m, x[i], x[j]) for i, j in times)
    )
    res["predictable_sub_monotone"] = _implies(predictable and sub, all(ae_le(m, x[i], x[j]) for i, j in times))
    res["predictable_super_monotone"] = _implies(predictable and sup, all(ae_ge(m, x[i], x[j]) for i, j in times))

    stakes = random_predictable_process(rng, f, 1)
    res["transform_martingale"] = _implies(mart, is_martingale(m, f, transform(stakes, x)))
    nonneg = ProcessTable([[(abs(v[0]),) for v in table] for table in stakes.tables])
    res["transform_submartingale"] = _implies(sub, is_submartingale(m, f, transform(nonneg, x)))
    return res

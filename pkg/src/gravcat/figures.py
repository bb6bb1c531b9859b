"""Registry of figure recipes: which sweep reproduces each published curve family.

Figure ids run 1a ... 22b in publication order of the plotted figures; the
unlabelled schematic and cycle diagram have no recipe. Captions fix the held
parameter; the series values are not stated there, so each recipe carries an
explicit list. Where caption and running text disagree, the text wins and
``source`` says so.
"""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["FigureRecipe", "RECIPES", "get_recipe", "known_ids"]

T_SERIES = (0.1, 0.2, 0.5, 1.0)
GAMMA_SERIES = (0.5, 1.0, 1.5, 2.0)
OMEGA_SERIES = (1.0, 2.0, 3.0)

T_RANGE = (0.02, 3.0)
COUPLING_RANGE = (0.05, 4.0)
SPLITTING_RANGE = (0.05, 4.0)
T_COLD = 0.5


@dataclass(frozen=True)
class FigureRecipe:
    id: str
    kind: str  # var_sim, var_ind, gamma_ratio, entropy, energy, cycle, efficiency
    axis: str
    fixed: dict
    series_param: str | None
    series: tuple
    start: float
    stop: float
    points: int = 200
    pair: tuple | None = None
    target: str | None = None
    caption: str = ""
    source: str = "caption"
    extra: dict = field(default_factory=dict)


def _axis_range(axis):
    return {"temp": T_RANGE, "gamma": COUPLING_RANGE, "omega": SPLITTING_RANGE}[axis]


def _series_values(name):
    return {"temp": T_SERIES, "gamma": GAMMA_SERIES, "omega": OMEGA_SERIES}[name]


def _est(fid, kind, pair, axis, series_param, fixed, caption, source="caption", target=None):
    start, stop = _axis_range(axis)
    return FigureRecipe(
        id=fid, kind=kind, axis=axis, fixed=dict(fixed), series_param=series_param,
        series=_series_values(series_param), start=start, stop=stop, pair=pair,
        target=target or (axis if kind != "gamma_ratio" else None), caption=caption, source=source,
    )


GT = ("gamma", "temp")
WT = ("omega", "temp")
WG = ("omega", "gamma")


def _build():
    r = []
    # (gamma, T) pair
    for fid, kind, what in (("1", "var_sim", "simultaneous Var(T)"), ("3", "var_ind", "individual Var(T)"),
                            ("5", "gamma_ratio", "Gamma(T)")):
        r.append(_est(fid + "a", kind, GT, "temp", "gamma", {"omega": 1.0},
                      f"{what} vs T, different gamma, omega = 1"))
        r.append(_est(fid + "b", kind, GT, "temp", "omega", {"gamma": 1.5},
                      f"{what} vs T, different omega, gamma = 1.5"))
    for fid, kind, what in (("2", "var_sim", "simultaneous Var(gamma)"), ("4", "var_ind", "individual Var(gamma)"),
                            ("6", "gamma_ratio", "Gamma(gamma)")):
        r.append(_est(fid + "a", kind, GT, "gamma", "temp", {"omega": 2.0},
                      f"{what} vs gamma, different T, omega = 2"))
        r.append(_est(fid + "b", kind, GT, "gamma", "omega", {"temp": 0.1},
                      f"{what} vs gamma, different omega, T = 0.1"))

    # (omega, T) pair
    r.append(_est("11a", "var_sim", WT, "omega", "temp", {"gamma": 1.0}, "simultaneous Var(omega) vs omega, different T, gamma = 1"))
    r.append(_est("11b", "var_sim", WT, "omega", "gamma", {"temp": 0.1}, "simultaneous Var(omega) vs omega, different gamma, T = 0.1"))
    r.append(_est("12a", "var_sim", WT, "temp", "omega", {"gamma": 2.0}, "simultaneous Var(T) vs T, different omega, gamma = 2"))
    r.append(_est("12b", "var_sim", WT, "temp", "gamma", {"omega": 1.5}, "simultaneous Var(T) vs T, different gamma, omega = 1.5"))
    r.append(_est("13a", "var_ind", WT, "omega", "temp", {"gamma": 1.0}, "individual Var(omega) vs omega, different T, gamma = 1"))
    r.append(_est("13b", "var_ind", WT, "omega", "gamma", {"temp": 0.1},
                  "individual Var(omega) vs omega, T = 0.1",
                  source="text: caption lists omega as the series; the text varies gamma at T = 0.1"))
    r.append(_est("14a", "var_ind", WT, "temp", "omega", {"gamma": 2.0}, "individual Var(T) vs T, different omega, gamma = 2"))
    r.append(_est("14b", "var_ind", WT, "temp", "gamma", {"omega": 1.5}, "individual Var(T) vs T, different gamma, omega = 1.5"))
    r.append(_est("15a", "gamma_ratio", WT, "omega", "temp", {"gamma": 1.0},
                  "Gamma(omega) vs omega, gamma = 1",
                  source="text: caption lists omega as the series; the text varies T at gamma = 1"))
    r.append(_est("15b", "gamma_ratio", WT, "omega", "gamma", {"temp": 0.1}, "Gamma(omega) vs omega, different gamma, T = 0.1"))
    r.append(_est("16a", "gamma_ratio", WT, "temp", "omega", {"gamma": 2.0}, "Gamma(T) vs T, different omega, gamma = 2"))
    r.append(_est("16b", "gamma_ratio", WT, "temp", "gamma", {"omega": 1.0}, "Gamma(T) vs T, different gamma, omega = 1"))

    # (omega, gamma) pair
    r.append(_est("17a", "var_sim", WG, "gamma", "omega", {"temp": 0.2}, "simultaneous Var(gamma) vs gamma, different omega, T = 0.2"))
    r.append(_est("17b", "var_sim", WG, "gamma", "temp", {"omega": 2.0},
                  "simultaneous Var(gamma) vs gamma, omega = 2",
                  source="text: caption lists gamma as the series; the text varies T at omega = 2"))
    r.append(_est("18a", "var_sim", WG, "omega", "gamma", {"temp": 0.2}, "simultaneous Var(omega) vs omega, different gamma, T = 0.2"))
    r.append(_est("18b", "var_sim", WG, "omega", "temp", {"gamma": 2.0}, "simultaneous Var(omega) vs omega, different T, gamma = 2"))
    r.append(_est("19a", "var_ind", WG, "gamma", "omega", {"temp": 0.2}, "individual Var(gamma) vs gamma, different omega, T = 0.2"))
    r.append(_est("19b", "var_ind", WG, "gamma", "temp", {"omega": 2.0}, "individual Var(gamma) vs gamma, different T, omega = 2"))
    r.append(_est("20a", "var_ind", WG, "omega", "gamma", {"temp": 0.2}, "individual Var(omega) vs omega, different gamma, T = 0.2"))
    r.append(_est("20b", "var_ind", WG, "omega", "temp", {"gamma": 2.0},
                  "individual Var(omega) vs omega, different T",
                  source="text: caption holds omega = 2 while sweeping omega; the text holds gamma = 2"))
    r.append(_est("21a", "gamma_ratio", WG, "gamma", "omega", {"temp": 0.2}, "Gamma(gamma) vs gamma, different omega, T = 0.2"))
    r.append(_est("21b", "gamma_ratio", WG, "gamma", "temp", {"omega": 2.0}, "Gamma(gamma) vs gamma, different T, omega = 2"))
    r.append(_est("22a", "gamma_ratio", WG, "omega", "gamma", {"temp": 0.2}, "Gamma(omega) vs omega, different gamma, T = 0.2"))
    r.append(_est("22b", "gamma_ratio", WG, "omega", "temp", {"gamma": 2.0},
                  "Gamma(omega) vs omega, different T",
                  source="caption and text both hold omega = 2 while sweeping omega; gamma = 2 as in 18b/20b"))

    # thermodynamics
    r.append(FigureRecipe("7a", "cycle", "omega_b", {"gamma": 3.0, "omega_a": 3.0, "t_hot": 2 * T_COLD, "t_cold": T_COLD},
                          None, (), 0.1, 3.0, caption="Q_h, Q_c, W vs omega_B; T_h = 2 T_c, gamma = 3, omega_A = 3"))
    r.append(FigureRecipe("7b", "cycle", "omega_b", {"gamma": 3.0, "omega_a": 5.0, "t_hot": 4 * T_COLD, "t_cold": T_COLD},
                          None, (), 0.1, 5.0, caption="Q_h, Q_c, W vs omega_B; T_h = 4 T_c, gamma = 3, omega_A = 5"))
    r.append(FigureRecipe("8a", "entropy", "temp", {"omega": 1.0}, "gamma", GAMMA_SERIES, 0.02, 5.0,
                          caption="S vs T, different gamma, omega = 1"))
    r.append(FigureRecipe("8b", "entropy", "gamma", {"omega": 1.0}, "temp", T_SERIES, 0.0, 4.0,
                          caption="S vs gamma, different T, omega = 1"))
    r.append(FigureRecipe("9a", "energy", "temp", {"omega": 1.0}, "gamma", GAMMA_SERIES, 0.02, 5.0,
                          caption="U vs T, different gamma, omega = 1"))
    r.append(FigureRecipe("9b", "energy", "gamma", {"omega": 1.0}, "temp", T_SERIES, 0.0, 4.0,
                          caption="U vs gamma, different T, omega = 1"))
    r.append(FigureRecipe("10a", "efficiency", "omega_b", {"omega_a": 3.0, "t_hot": 2 * T_COLD, "t_cold": T_COLD},
                          "gamma", (1.0, 2.0, 3.0), 0.1, 3.0,
                          caption="efficiency vs omega_B, different gamma, omega_A = 3, T_h = 2 T_c"))
    r.append(FigureRecipe("10b", "efficiency", "omega_b", {"omega_a": 3.0, "t_hot": 4 * T_COLD, "t_cold": T_COLD},
                          "gamma", (1.0, 2.0, 3.0), 0.1, 3.0,
                          caption="efficiency vs omega_B, different gamma, omega_A = 3, T_h = 4 T_c"))
    return {rec.id: rec for rec in r}


RECIPES = _build()


def _sort_key(fid):
    return int(fid[:-1]), fid[-1]


def known_ids() -> list[str]:
    return sorted(RECIPES, key=_sort_key)


def get_recipe(fid: str) -> FigureRecipe:
    try:
        return RECIPES[fid.strip().lower()]
    except KeyError:
        raise KeyError(f"unknown figure {fid!r}; known: {', '.join(known_ids())}") from None

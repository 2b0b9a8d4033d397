"""lerchlab: numerical verification of a catalog of double integrals whose
closed forms pass through the Lerch transcendent."""

from .specfun import (
    DomainError,
    PoleError,
    UnsupportedRegionError,
    LerchStrategy,
    RationalAngle,
    accelerated_series_sum,
    acosh_principal,
    bessel_k,
    gauss_2f1_a1,
    glaisher_constant,
    hurwitz_zeta,
    hurwitz_zeta_sderiv,
    lerch_phi,
    principal_log,
    principal_power,
    riemann_zeta,
)
from .quadrature import (
    IntegrationError,
    NonRemovableError,
    QuadConfig,
    QuadratureResult,
    integrate_2d_paper,
    integrate_halfline,
    integrate_reduced_1d,
    integrate_reduced_log_loglog,
    integrate_split_at_one,
    integrate_unit_interval,
    removable_singularity_guard,
)
from .catalog import (
    CatalogEntry,
    DomainClass,
    IntegralParams,
    build_catalog,
    catalog_to_json,
    rhs_main_theorem,
)
from .verifier import (
    RunConfig,
    VerificationRecord,
    render_csv,
    render_json,
    render_markdown,
    run_catalog,
    verify_entry,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError", "PoleError", "UnsupportedRegionError",
    "LerchStrategy", "RationalAngle", "accelerated_series_sum",
    "acosh_principal", "bessel_k", "gauss_2f1_a1", "glaisher_constant",
    "hurwitz_zeta", "hurwitz_zeta_sderiv", "lerch_phi",
    "principal_log", "principal_power", "riemann_zeta",
    "IntegrationError", "NonRemovableError", "QuadConfig",
    "QuadratureResult", "integrate_2d_paper", "integrate_halfline",
    "integrate_reduced_1d", "integrate_reduced_log_loglog",
    "integrate_split_at_one", "integrate_unit_interval",
    "removable_singularity_guard",
    "CatalogEntry", "DomainClass", "IntegralParams", "build_catalog",
    "catalog_to_json", "rhs_main_theorem",
    "RunConfig", "VerificationRecord", "render_csv", "render_json",
    "render_markdown", "run_catalog", "verify_entry",
    "__version__",
]

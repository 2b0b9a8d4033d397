"""Run the verifier over the whole catalog and look at one entry closely.

Equivalent CLI: `lerchlab verify --format markdown`.
"""
from lerchlab import (
    RunConfig,
    build_catalog,
    render_markdown,
    rhs_main_theorem,
    run_catalog,
)

cfg = RunConfig(rel_tol=1e-6)
records = run_catalog(cfg)
print(render_markdown(records, cfg))

print("=== Anatomy of entry 3.1.3.48 ===")
entry = next(e for e in build_catalog() if e.id == "3.1.3.48")
print("integrand:", entry.integrand)
print("params   :", entry.params)
print("domain   :", entry.domain.value)
print()
print("Its closed form is the k = 0 collapse of the master identity, so it")
print("can be cross-checked without any quadrature at all:")
print("  Lerch-side value :", rhs_main_theorem(entry.params))
print("  closed form      :", complex(entry.closed_form()))
rec = next(r for r in records if r.entry_id == "3.1.3.48")
print("  quadrature       :", rec.numeric, f"(status {rec.status})")
print()
print("Entries flagged dispute-eligible carry transcription doubts; for")
print("those a closed-form mismatch is classified DISPUTED only when an")
print("independent numeric route confirms the quadrature value.")
for e in build_catalog():
    if e.dispute_eligible:
        print(" ", e.id, "-", "; ".join(e.notes))

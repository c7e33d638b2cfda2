"""The verification harness: statement verifiers and the batch campaign.

Each verifier takes a concrete group and a partition and checks one
statement about covering subgroups, Hall sets, residuals, or permutability,
returning a confirmed / counterexample / skipped outcome with a witness.
The campaign runs every verifier over every group in a corpus, across every
partition of each group's primes.

The command-line equivalents:
    sigmagroups verify --group A4 --statement ThmA.ii
    sigmagroups campaign --corpus builtin --out report.json
"""

from sigmagroups import (CampaignConfig, SigmaPartition, builtin_entry,
                         report_from_rows, run_campaign,
                         validate_covering_witness, verify_lemma_2_5_forward,
                         verify_theorem_A)

SIGMA1 = SigmaPartition.sigma1()

# --- a single statement, one group --------------------------------------------

# Covering statement: G lies in the class if and only if every candidate
# subgroup V (a maximal subgroup of a Sylow subgroup) has a supplement in
# the class.  For an out-of-class G the verifier must exhibit a V whose
# supplements all fail, and that witness is independently re-checkable.
A4 = builtin_entry("A4").build()
out = verify_theorem_A(A4, SIGMA1, "sigma-nilpotent", "A4")
print("ThmA.ii on A4:", out.verdict, "(vacuous)" if out.vacuous else "")
print("    witness V has order", out.witness["V"]["order"],
      "| every supplement outside the class:",
      out.witness["supplements_all_outside_class"])
print("    witness revalidates:",
      validate_covering_witness(A4, SIGMA1, "sigma-nilpotent", out.witness))

# Complement statement: for a sigma-soluble PsigmaT-group, the residual D
# is abelian Hall and complemented blockwise.
F21 = builtin_entry("F21").build()
out = verify_lemma_2_5_forward(F21, SIGMA1, "F21")
print("\nLem2.5.fwd on F21:", out.verdict)
print("    residual order", out.witness["D"]["order"],
      "| complement order", out.witness["M"]["order"])

# --- a small campaign -----------------------------------------------------------

names = ["S3", "C6", "A4", "S4", "SL(2,3)", "F21"]
rows = run_campaign([builtin_entry(n) for n in names],
                    CampaignConfig(jobs=1, zero_millis=True))
report = report_from_rows(rows)

print("\ncampaign over", ", ".join(names))
summary = report["summary"]
print("outcomes:", len(rows),
      "| confirmed:", summary["confirmed"],
      "| counterexamples:", summary["counterexample"],
      "| skipped:", summary["skipped"],
      "| vacuous:", summary["vacuous"])
print("per statement:")
for statement, counts in sorted(summary["by_statement"].items()):
    print(f"    {statement:12s} {counts['confirmed']:3d} confirmed, "
          f"{counts['counterexample']} counterexamples, "
          f"{counts['skipped']} skipped")

"""Response probabilities are not degrees of truth.

Statements like "the r1 probability at x is 0.6" are plainly true or
false, so their conjunction is classical.  Treating 0.6 itself as a truth
degree and conjoining with many-valued connectives yields different
numbers.  The mismatch report tabulates the contrast pair by pair.
"""

from soritic import luk_eval, mismatch_report

for p, q in [(1.0, 1.0), (0.6, 0.6), (0.8, 0.3), (0.2, 0.9)]:
    report = mismatch_report(p, q)
    print(
        f"p={p} q={q}  weak={report.weak:.2f} strong={report.strong:.2f} "
        f"impl={report.implication_value:.2f} diverges={report.diverges}"
    )

# The weak conjunction is idempotent, the strong one is not: conjoining a
# middling degree with itself drains it.
p = 0.6
print("weak(p,p):", luk_eval("weak_conj", p, p))
print("strong(p,p):", luk_eval("strong_conj", p, p))

# The one clean parallel: internal negation mirrors complementary
# probability exactly.
print("negation(0.3):", luk_eval("negation", 0.3))

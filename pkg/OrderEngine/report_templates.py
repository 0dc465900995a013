"""
Fixed text for CLI reports. Reports go to stdout and must not depend on
timing or hashing, so everything variable is passed in explicitly.
"""

RULE = "=" * 60

# Poset reports

CLASSIFY_TEMPLATE = """poset: {n} elements
chain={chain} weak={weak} interval={interval} semiorder={semiorder} threshold={threshold}
forbidden: {forbidden}"""

TRACES_TEMPLATE = """pred trace (x <= y):
{pred}
succ trace (x <= y):
{succ}
pred = succ: {equal}"""

CRITICAL_TEMPLATE = """critical pairs: {count}
{pairs}"""

DIMENSION_TEMPLATE = "dimension={value}"

DIMENSION_EXCEEDED_TEMPLATE = "dimension>{max_k}"

REALIZER_TEMPLATE = """threshold order on {lo}..{hi}, alpha={alpha}
L1: {first}
L2: {second}
L3: {third}
extends order: {extends}
intersection equals order: {exact}"""

# Group reports

GROUP_HEADER_TEMPLATE = """{rule}
{kind} group, window {window} ({size} points), margin {margin}
{rule}"""

GROUP_CHECK_TEMPLATE = """{mark_compat} compatibility: {comparable}/{trials} comparable triples, {failures} failures
{mark_trace} pred = succ on {interior} interior points
{mark_cover} upper and lower covers for interior points
interval={interval} semiorder={semiorder} weak={weak}
threshold={threshold} (pred antisymmetric={antisymmetric}, pred total={total}, auxiliary order={auxiliary})"""

INC0_TEMPLATE = """inc(0): {size} points
{points}
bipartite={bipartite} prime={prime} isolated={isolated}
{mark_semi} semiorder={semiorder} matches bipartite
{mark_threshold} threshold={threshold} matches bipartite without isolated points"""

KAI_TEMPLATE = """K={K}, A={A}, I={I}
exact={exact}
window cross-check: {checks}"""

TRANSFER_ROW_TEMPLATE = "  {mark} {pattern}: found={found} constructed={constructed}"

TRANSFER_TEMPLATE = """n={n}: 1+{n} found={one_plus_n}{grown}
{rows}"""

# Battery and Clifford reports

REFUTED_TEMPLATE = """P ⪯ Q refuted
group: {group}
P excluded: {reason}
Q found at: {witness}"""

NOT_REFUTED_TEMPLATE = """P ⪯ Q not refuted by {count} groups (this is not a proof)"""

WITNESS_TEMPLATE = """segment {segment} is not normal
f = {f}
u = {u}
u^-1 f u = {result}
found by: {strategy}"""

NONE_FOUND_TEMPLATE = """no conjugation witness for {segment} in {trials} trials"""

NOTE_TEMPLATE = "note: {note}"


def yes_no(flag) -> str:
    if flag is None:
        return "n/a"
    return "yes" if flag else "no"


def mark(flag: bool) -> str:
    return "✓" if flag else "✗"

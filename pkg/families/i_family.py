"""
The I family: a set-theoretic solution on X = [1, 2n] (n >= 2), with the
second half of the basis written m_a = w_(n+a). Relabelling by

    f(a) = 2n+1-a    a even, 1 < a <= n;  a odd, n < a < 2n
           a         otherwise

gives the dihedral rack D_(2n).
"""

from families.cases import Case, CaseTable, require, table_solution
from families.l_family import FamilySolution
from families.verdict import FamilyVerdict, infinite, open_problem


def i_table(n: int) -> CaseTable:
    low = lambda x: 1 <= x <= n
    high = lambda x: n + 1 <= x <= 2 * n
    even = lambda a, b: (a + b) % 2 == 0
    odd = lambda a, b: (a + b) % 2 == 1

    def region(pa, pb, parity):
        return lambda a, b: pa(a) and pb(b) and parity(a, b)

    r1 = region(low, low, even)
    r2 = region(low, low, odd)
    r3 = region(high, high, odd)
    r4 = region(high, high, even)
    r5 = region(high, low, even)
    r6 = region(high, low, odd)
    r7 = region(low, high, odd)
    r8 = region(low, high, even)

    def case(name, reg, cond, out):
        return Case(name, lambda a, b: reg(a, b) and cond(a, b), lambda a, b: (out(a, b), a))

    return CaseTable("I", [
        case("(1) b = 2a", r1, lambda a, b: b == 2 * a, lambda a, b: 1),
        case("(1) b > 2a", r1, lambda a, b: b > 2 * a, lambda a, b: b - 2 * a + 1),
        case("(1) 0 < 2a-b <= n", r1, lambda a, b: 0 < 2 * a - b <= n, lambda a, b: 2 * a - b),
        case("(1) 2a-b >= n+1", r1, lambda a, b: 2 * a - b >= n + 1, lambda a, b: 2 * n + 1 - 2 * a + b),

        case("(2) 2a+b-1 <= n", r2, lambda a, b: 2 * a + b - 1 <= n, lambda a, b: 2 * a + b - 1),
        case("(2) n <= 2a+b-2 <= 2n-1", r2, lambda a, b: n <= 2 * a + b - 2 <= 2 * n - 1,
             lambda a, b: 2 * n + 2 - 2 * a - b),
        case("(2) 2a+b-2 >= 2n", r2, lambda a, b: 2 * a + b - 2 >= 2 * n, lambda a, b: 2 * a + b - 2 * n - 1),

        case("(3) 3n+3 <= 2a+b <= 4n+1", r3, lambda a, b: 3 * n + 3 <= 2 * a + b <= 4 * n + 1,
             lambda a, b: 2 * a + b - 2 * n - 1),
        case("(3) 4n+2 <= 2a+b <= 5n+1", r3, lambda a, b: 4 * n + 2 <= 2 * a + b <= 5 * n + 1,
             lambda a, b: 6 * n + 2 - 2 * a - b),
        case("(3) 2a+b >= 5n+2", r3, lambda a, b: 2 * a + b >= 5 * n + 2, lambda a, b: 2 * a + b - 4 * n - 1),

        case("(4) 2a-b = n", r4, lambda a, b: 2 * a - b == n, lambda a, b: n + 1),
        case("(4) n < 2a-b <= 2n", r4, lambda a, b: n < 2 * a - b <= 2 * n, lambda a, b: 2 * a - b),
        case("(4) 2n+1 <= 2a-b <= 3n-1", r4, lambda a, b: 2 * n + 1 <= 2 * a - b <= 3 * n - 1,
             lambda a, b: 4 * n + 1 - 2 * a + b),
        case("(4) 0 < 2a-b < n", r4, lambda a, b: 0 < 2 * a - b < n, lambda a, b: 2 * n + 1 + b - 2 * a),

        case("(5) 2n+3 <= 2a+b <= 3n+1", r5, lambda a, b: 2 * n + 3 <= 2 * a + b <= 3 * n + 1,
             lambda a, b: 2 * a + b - 2 * n - 1),
        case("(5) 3n+2 <= 2a+b <= 4n+1", r5, lambda a, b: 3 * n + 2 <= 2 * a + b <= 4 * n + 1,
             lambda a, b: 4 * n + 2 - 2 * a - b),
        case("(5) 4n+2 <= 2a+b <= 5n", r5, lambda a, b: 4 * n + 2 <= 2 * a + b <= 5 * n,
             lambda a, b: 2 * a + b - 4 * n - 1),

        case("(6) 2a-b = 2n", r6, lambda a, b: 2 * a - b == 2 * n, lambda a, b: 1),
        case("(6) 2n < 2a-b <= 3n", r6, lambda a, b: 2 * n < 2 * a - b <= 3 * n, lambda a, b: 2 * a - b - 2 * n),
        case("(6) 3n+1 <= 2a-b < 4n", r6, lambda a, b: 3 * n + 1 <= 2 * a - b < 4 * n,
             lambda a, b: 4 * n + 1 - 2 * a + b),
        case("(6) n+1 <= 2a-b < 2n", r6, lambda a, b: n + 1 <= 2 * a - b < 2 * n,
             lambda a, b: b - 2 * a + 2 * n + 1),

        case("(7) 2a-b = -n", r7, lambda a, b: 2 * a - b == -n, lambda a, b: n + 1),
        case("(7) -n < 2a-b <= 0", r7, lambda a, b: -n < 2 * a - b <= 0, lambda a, b: 2 * n + 2 * a - b),
        case("(7) 2a-b >= 1", r7, lambda a, b: 2 * a - b >= 1, lambda a, b: 2 * n + 1 - 2 * a + b),
        case("(7) 2a-b < -n", r7, lambda a, b: 2 * a - b < -n, lambda a, b: 1 + b - 2 * a),

        case("(8) 2a+b <= 2n+1", r8, lambda a, b: 2 * a + b <= 2 * n + 1, lambda a, b: 2 * a + b - 1),
        case("(8) 2n+2 <= 2a+b <= 3n+1", r8, lambda a, b: 2 * n + 2 <= 2 * a + b <= 3 * n + 1,
             lambda a, b: 4 * n + 2 - 2 * a - b),
        case("(8) 2a+b >= 3n+2", r8, lambda a, b: 2 * a + b >= 3 * n + 2, lambda a, b: 2 * a + b - 2 * n - 1),
    ])


def i_relabel(n: int) -> tuple[int, ...]:
    def f(a):
        if a % 2 == 0 and 1 < a <= n:
            return 2 * n + 1 - a
        if a % 2 == 1 and n < a < 2 * n:
            return 2 * n + 1 - a
        return a

    return tuple(f(a) - 1 for a in range(1, 2 * n + 1))


def i_family(n: int) -> FamilySolution:
    """
    Raises:
        ParameterError: n < 2
        TotalityError: a pair no case covers
    """
    require(n >= 2, f"I family needs n >= 2, got {n}")
    size = 2 * n
    return FamilySolution(table_solution(i_table(n), size), i_relabel(n), size)


def i_verdict(n: int) -> FamilyVerdict:
    require(n >= 2, f"I family needs n >= 2, got {n}")
    params = {"n": n}
    if n > 2:
        return infinite("I", params, "D_2n rack, n>2")
    return open_problem("I", params, "D_4 rack type without coefficients: dimension not determined")

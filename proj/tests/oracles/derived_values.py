"""Independent oracle for the frozen expected values in the C++ test suites.

Evaluates the piecewise inverse radial map directly from the proportionality
relations (no shared code with the library), counts IoU bits by brute force,
and does the plan arithmetic in exact rationals.

    python3 tests/oracles/derived_values.py
"""
from fractions import Fraction as F


def inverse_radius(r_prime, r1, r2, r3):
    # (r - r1) / (r3 - r1) == (r' - r2) / (r3 - r2) inside the iris,
    # r / r1 == r' / r2 inside the pupil, identity outside.
    if r_prime < r2:
        return F(r1, 1) * r_prime / r2
    if r_prime < r3:
        return r1 + (F(r_prime) - r2) * (F(r3) - r1) / (F(r3) - r2)
    return F(r_prime)


def main():
    print("m(30,60,120) =", F(120 - 30, 120 - 60))
    print("T^-1(90; 30,60,120) =", inverse_radius(90, 30, 60, 120))
    print("T^-1(30; 30,60,120) =", inverse_radius(30, 30, 60, 120))

    # 10 columns x 15 rows; A = rows 0-9, B = rows 5-14.
    a = {(r, c) for r in range(0, 10) for c in range(10)}
    b = {(r, c) for r in range(5, 15) for c in range(10)}
    inter, union = len(a & b), len(a | b)
    print("iou counts", inter, union, "->", inter / (union + 1e-6))

    lo, hi, n = F(15, 100), F(75, 100), 19
    step = (hi - lo) / (n - 1)
    print("plan spacing", step, float(step))
    print("plan tags", [round(float(lo + i * step) * 1000) for i in range(n)])
    print("outputs 1920 inputs x (19 + 1) =", 1920 * (19 + 1))


if __name__ == "__main__":
    main()

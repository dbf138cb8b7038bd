#!/usr/bin/env python3
"""Generate rank-1 lattice generating vectors for mvn.hpp.

Component-by-component search over random odd candidates, minimizing the
P_2 worst-case error in the weighted Korobov space (product weights
gamma_j = 1/j^2, smoothness alpha = 2).  One vector per lattice size
N = 2^10 .. 2^19, 99 components each (enough for integration dimension
p - 1 with p <= 100).

Writes include/simerr/lattice_vectors.hpp.  Deterministic: fixed seed.
"""

import numpy as np

SIZES = [1 << m for m in range(10, 20)]
DIMS = 99
SEED = 20240501


def omega_table(n: int) -> np.ndarray:
    # 1 + gamma * omega(x) kernel uses omega(x) = 2*pi^2*(x^2 - x + 1/6),
    # the alpha=2 Bernoulli term of the Korobov-space worst-case error.
    x = np.arange(n, dtype=np.float64) / n
    return 2.0 * np.pi**2 * (x * x - x + 1.0 / 6.0)


def cbc_vector(n: int, dims: int, rng: np.random.Generator, tries: int) -> list[int]:
    table = omega_table(n)
    k = np.arange(n, dtype=np.int64)
    prod = 1.0 + table  # component 1 fixed to g_1 = 1
    gen = [1]
    for j in range(2, dims + 1):
        gamma = 1.0 / (j * j)
        cands = rng.integers(1, n // 2, size=tries, dtype=np.int64) * 2 + 1
        cands = np.unique(cands)
        best_a, best_err = None, None
        for a in cands:
            vals = table[(k * int(a)) % n]
            err = float(np.dot(prod, 1.0 + gamma * vals))
            if best_err is None or err < best_err:
                best_a, best_err = int(a), err
        gen.append(best_a)
        prod = prod * (1.0 + gamma * table[(k * best_a) % n])
    return gen


def main() -> None:
    rng = np.random.default_rng(SEED)
    vectors = {}
    for n in SIZES:
        tries = 48 if n <= (1 << 16) else 32
        vectors[n] = cbc_vector(n, DIMS, rng, tries)
        print(f"N={n}: first entries {vectors[n][:6]}")

    lines = []
    lines.append("// Generated by tools/gen_lattice.py -- do not edit by hand.")
    lines.append("// Rank-1 lattice generating vectors (CBC search, P2 criterion,")
    lines.append("// product weights 1/j^2) for the randomized QMC integrator.")
    lines.append("#pragma once")
    lines.append("")
    lines.append("#include <array>")
    lines.append("#include <cstdint>")
    lines.append("")
    lines.append("namespace simerr::detail {")
    lines.append("")
    lines.append(f"inline constexpr std::size_t kLatticeStages = {len(SIZES)};")
    lines.append(f"inline constexpr std::size_t kLatticeMaxDim = {DIMS};")
    lines.append("")
    sizes = ", ".join(str(n) for n in SIZES)
    lines.append("inline constexpr std::array<std::uint32_t, kLatticeStages> kLatticeSizes = {")
    lines.append(f"    {sizes}}};")
    lines.append("")
    lines.append("inline constexpr std::array<std::array<std::uint32_t, kLatticeMaxDim>,")
    lines.append("                             kLatticeStages>")
    lines.append("    kLatticeGenerators = {{")
    for n in SIZES:
        row = vectors[n]
        lines.append(f"    {{{{  // N = {n}")
        for i in range(0, DIMS, 10):
            chunk = ", ".join(str(v) for v in row[i : i + 10])
            tail = "," if i + 10 < DIMS else ""
            lines.append(f"        {chunk}{tail}")
        lines.append("    }},")
    lines.append("}};")
    lines.append("")
    lines.append("}  // namespace simerr::detail")
    lines.append("")

    out = "include/simerr/lattice_vectors.hpp"
    with open(out, "w") as fh:
        fh.write("\n".join(lines))
    print(f"wrote {out}")


if __name__ == "__main__":
    main()

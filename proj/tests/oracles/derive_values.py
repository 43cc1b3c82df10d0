# Copyright 2026 The Mirrorbreak Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent numpy/scipy reference for values frozen into the C++ tests.

Builds operators with explicit Kronecker products (qubit 0 = least
significant bit, so qubit 0 is the RIGHTMOST Kronecker factor) and prints
the numbers the tests hard-code.
"""

import numpy as np
from scipy.linalg import expm

I2 = np.eye(2)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Z = np.diag([1, -1]).astype(complex)
H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)


def ry(t):
    return expm(-1j * t / 2 * np.array([[0, -1j], [1j, 0]]))


def u3(t, p, l):
    return np.array([[np.cos(t / 2), -np.exp(1j * l) * np.sin(t / 2)],
                     [np.exp(1j * p) * np.sin(t / 2), np.exp(1j * (p + l)) * np.cos(t / 2)]])


def one(n, q, m):
    out = np.array([[1.0 + 0j]])
    for k in reversed(range(n)):
        out = np.kron(out, m if k == q else I2)
    return out


def two(n, a, b, fn):
    """fn(bit_a, bit_b) -> (phase-weighted) output list; built entrywise."""
    dim = 2 ** n
    u = np.zeros((dim, dim), dtype=complex)
    for col in range(dim):
        ba, bb = (col >> a) & 1, (col >> b) & 1
        for (oa, ob), amp in fn(ba, bb):
            row = col & ~(1 << a) & ~(1 << b) | (oa << a) | (ob << b)
            u[row, col] += amp
    return u


def cx(n, c, t):
    return two(n, c, t, lambda bc, bt: [((bc, bt ^ bc), 1.0)])


def rzz(n, a, b, th):
    # ZZ eigenvalue +1 on equal bits -> e^{-i th/2}
    return two(n, a, b, lambda x, y: [((x, y), np.exp(-1j * th / 2 * (1 if x == y else -1)))])


def swap(n, a, b):
    return two(n, a, b, lambda x, y: [((y, x), 1.0)])


def operator_schmidt_rank(u, dl, dr):
    # u acts on (left system of dim dl) x (right system of dim dr), left = qubit 0
    t = u.reshape(dr, dl, dr, dl)          # (out_r, out_l, in_r, in_l)
    t = t.transpose(1, 3, 0, 2).reshape(dl * dl, dr * dr)
    s = np.linalg.svd(t, compute_uv=False)
    return int(np.sum(s > 1e-12 * s[0]))


def main():
    print("RZ(pi) =", np.diag(expm(-1j * np.pi / 2 * Z)))

    r = operator_schmidt_rank(swap(2, 0, 1), 2, 2)
    print("SWAP operator Schmidt rank:", r, "-> total_elements", 2 * 2 * 2 * r)

    # fixed 3-qubit reference circuit (same as test_oracle.cpp)
    n = 3
    psi = np.zeros(2 ** n, dtype=complex)
    psi[0] = 1
    ops = [one(n, 0, H), cx(n, 0, 1), one(n, 2, ry(0.7)), rzz(n, 1, 2, 0.3),
           one(n, 0, u3(0.1, 0.2, 0.3)), swap(n, 0, 2), cx(n, 2, 1)]
    for op in ops:
        psi = op @ psi
    np.set_printoptions(precision=15)
    for i, a in enumerate(psi):
        print(f"amp[{i}] = ({a.real:.15f}, {a.imag:.15f})")

    # tvd(uniform over 4, e0)
    p = np.full(4, 0.25)
    q = np.array([1.0, 0, 0, 0])
    print("tvd(uniform4, e0) =", 0.5 * np.abs(p - q).sum())


if __name__ == "__main__":
    main()

# Copyright 2026 The FQA Authors
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

"""Regenerates the STO-3G integral fixtures and their reference energies.

Requires pyscf. Writes <name>.fcidump (RHF molecular-orbital basis) and
<name>.json (geometry, HF and FCI energies) next to this script.
"""

import json
import pathlib

import numpy as np
from pyscf import fci, gto, scf
from pyscf.tools import fcidump

HERE = pathlib.Path(__file__).resolve().parent
ANGLE = np.radians(104.5)
MOLECULES = {
    "h2": "H 0 0 0; H 0 0 0.7474",
    "lih": "Li 0 0 0; H 0 0 1.45",
    "h2o": "O 0 0 0; H 0.958 0 0; H %.12f %.12f 0"
    % (0.958 * np.cos(ANGLE), 0.958 * np.sin(ANGLE)),
}


def main():
    for name, geom in MOLECULES.items():
        mol = gto.M(atom=geom, basis="sto-3g", unit="Angstrom", symmetry=False)
        mf = scf.RHF(mol)
        mf.conv_tol = 1e-12
        mf.kernel()
        if not mf.converged:
            raise RuntimeError(f"{name}: RHF did not converge")
        fcidump.from_scf(mf, str(HERE / f"{name}.fcidump"), tol=1e-14)
        solver = fci.FCI(mf)
        solver.conv_tol = 1e-13
        e_fci, _ = solver.kernel()
        record = dict(molecule=name, basis="STO-3G", geometry=geom,
                      norb=int(mf.mo_coeff.shape[1]), nelec=int(mol.nelectron),
                      ms2=int(mol.spin), hf_energy=float(mf.e_tot),
                      fci_energy=float(e_fci))
        with open(HERE / f"{name}.json", "w") as f:
            json.dump(record, f, indent=2)
        print(name, record["fci_energy"])


if __name__ == "__main__":
    main()

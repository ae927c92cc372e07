from expgroups.oracle.audits import axiom_audit
from expgroups.oracle.generator import RandomElementGenerator, random_element
from expgroups.oracle.obfuscator import Obfuscator
from expgroups.oracle.probes import conjugacy_separated, separation_probe
from expgroups.oracle.selftest import run_selftest
from expgroups.oracle.vectors import read_vectors, run_vectors, write_vectors

__all__ = [
    "Obfuscator",
    "RandomElementGenerator",
    "axiom_audit",
    "conjugacy_separated",
    "random_element",
    "read_vectors",
    "run_selftest",
    "run_vectors",
    "separation_probe",
    "write_vectors",
]

"""Undirected analysis of orbit graphs: planarity, genus oracle, minors, spectra."""

from .certificate import CertificateVerdict, MinorCertificate, verify_k33_certificate
from .export import export_dot, export_json, import_json
from .genus import genus_by_rotation_systems, rotation_system_count
from .multigraph import MultiGraph, count_faces, simplify
from .planarity import PlanarityResult, is_planar
from .spectral import SpectralProbe, spectral_gap, spectral_probe

__all__ = [
    "CertificateVerdict",
    "MinorCertificate",
    "MultiGraph",
    "PlanarityResult",
    "SpectralProbe",
    "count_faces",
    "export_dot",
    "export_json",
    "genus_by_rotation_systems",
    "import_json",
    "is_planar",
    "rotation_system_count",
    "simplify",
    "spectral_gap",
    "spectral_probe",
    "verify_k33_certificate",
]

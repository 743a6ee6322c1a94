"""Kernelization and compression pipelines."""
from .instance import NOT_IN_CLASS, REDUCED, RESOLVED_NO, RESOLVED_YES, KernelInstance, RuleRecord
from .interval import build_compressed_instance, interval_is_compress
from .replay import replay_trace
from .split import SplitPartition, split_edit, split_is_kernel, vc_to_split_modulator
from .turing import OracleQuery, TuringResult, turing_kernel_wclique

__all__ = [
    "KernelInstance",
    "RuleRecord",
    "REDUCED",
    "NOT_IN_CLASS",
    "RESOLVED_YES",
    "RESOLVED_NO",
    "SplitPartition",
    "split_edit",
    "split_is_kernel",
    "vc_to_split_modulator",
    "interval_is_compress",
    "build_compressed_instance",
    "turing_kernel_wclique",
    "OracleQuery",
    "TuringResult",
    "replay_trace",
]

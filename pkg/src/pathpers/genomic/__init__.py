"""Topological recurrence analysis of time-stamped aligned genomes."""
from .dataset import AlignedDataset, Mutation, edge_to_mutation, hamming_matrix
from .ingest import IngestReport, ingest_fasta, read_fasta, read_metadata
from .synth import SynthSpec, synth_dataset
from .tri import TriResult, TriTable, encoded_matrix, tri_analysis, tri_csv, tri_summary

__all__ = [
    "AlignedDataset", "IngestReport", "Mutation", "SynthSpec", "TriResult", "TriTable",
    "edge_to_mutation", "encoded_matrix", "hamming_matrix", "ingest_fasta", "read_fasta",
    "read_metadata", "synth_dataset", "tri_analysis", "tri_csv", "tri_summary",
]

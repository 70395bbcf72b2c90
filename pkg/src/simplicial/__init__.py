"""Bar simplicial set, duplicial operator and homology."""

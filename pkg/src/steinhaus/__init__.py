"""Symmetric binary Steinhaus triangles, Steinhaus graphs and generalized Pascal triangles."""

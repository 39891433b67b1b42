"""Property-based tests for latpoly."""
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from latpoly.utils.geometry import Poly
from latpoly.utils.lattice import lattice_stats
from latpoly.utils.unimodular import canonical_form

from .utils.strategies import hull_of_pairs, unimodular_maps, vertex_sets


# Polygons in (1/k)Z² under random lattice-preserving affine maps: the normal
# form and the lattice point statistics must not move.
@settings(
    max_examples=500,
    derandomize=True,  # deterministic mode to avoid CI flakiness
    deadline=None,
    suppress_health_check=list(HealthCheck),  # `assume` filters degenerate hulls.
)
@given(
    pairs=vertex_sets,
    k=st.integers(1, 4),
    umaps=st.lists(unimodular_maps(), min_size=100, max_size=100),
)
def test_canonical_form_is_invariant(pairs, k, umaps) -> None:
    hull = hull_of_pairs(pairs, k)
    assume(isinstance(hull, Poly))
    polygon = hull.polygon
    canonical = canonical_form(polygon)
    stats = lattice_stats(polygon)

    assert canonical_form(canonical) == canonical
    for umap in umaps:
        image = umap.apply(polygon)
        assert canonical_form(image) == canonical
        assert lattice_stats(image) == stats


if __name__ == "__main__":

    # Run tests, including shrinking and reporting any known failures.
    test_canonical_form_is_invariant()  # pylint: disable=E1120

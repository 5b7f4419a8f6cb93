"""Tests for multiplicity index maps."""

from mimo_capacity.covariance import from_groups, index_maps, multiplicity_index


class TestMultiplicityIndex:
    """Tests for (e_i, d_i)."""

    def test_single_group(self):
        """One group of multiplicity 3 should count derivatives down to 0."""
        index = multiplicity_index([3])
        assert index.e == (1, 1, 1)
        assert index.d == (2, 1, 0)

    def test_mixed_groups(self):
        """Each group should restart its derivative count."""
        index = multiplicity_index([2, 1, 3])
        assert index.e == (1, 1, 2, 3, 3, 3)
        assert index.d == (1, 0, 0, 2, 1, 0)
        assert index.n == 6

    def test_group_slices(self):
        """group_slices() should give contiguous 0-based row ranges."""
        index = multiplicity_index([2, 1, 3])
        assert index.group_slices() == [range(0, 2), range(2, 3), range(3, 6)]

    def test_definition(self):
        """d_i should equal the cumulative multiplicity of group e_i minus i."""
        mults = [1, 3, 2]
        index = multiplicity_index(mults)
        for i, (e, d) in enumerate(zip(index.e, index.d, strict=True), start=1):
            assert sum(mults[: e - 1]) < i <= sum(mults[:e])
            assert d == sum(mults[:e]) - i

    def test_index_maps_uses_mu_order(self):
        """index_maps() should follow the inverse-eigenvalue groups."""
        index = index_maps(from_groups([(0.5, 2), (2.0, 1)]))
        assert index.e == (1, 1, 2)
        assert index.d == (1, 0, 0)

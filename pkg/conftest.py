import pytest

from groups.catalog import catalog_group


@pytest.fixture
def group():
    """Catalog lookup: group('Q8') returns the cached GroupTable."""
    return catalog_group


@pytest.fixture
def element():
    """Element index by its printed label: element(G, 'x^2')."""
    def lookup(G, label):
        return G.labels.index(label)
    return lookup

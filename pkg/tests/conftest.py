import pytest

from nullforest import Forest, GenSpec, generate


def build_corpus(random_count: int = 500,
                 caterpillar_seeds: int = 10) -> list[tuple[str, Forest]]:
    """Seeded forests with n <= 10: random instances plus named families."""
    items: list[tuple[str, Forest]] = []
    for seed in range(random_count):
        n = 1 + (seed % 10)
        c = 1 + (seed % min(3, n))
        spec = GenSpec("random-forest", n, components=c, seed=seed)
        items.append((f"random-n{n}-c{c}-s{seed}", generate(spec)))
    for n in range(1, 11):
        items.append((f"path-{n}", generate(GenSpec("path", n))))
        items.append((f"star-{n}", generate(GenSpec("star", n))))
        for seed in range(caterpillar_seeds):
            spec = GenSpec("caterpillar", n, seed=seed)
            items.append((f"caterpillar-{n}-s{seed}", generate(spec)))
    return items


@pytest.fixture(scope="session")
def full_corpus() -> list[tuple[str, Forest]]:
    return build_corpus()


@pytest.fixture(scope="session")
def small_corpus() -> list[tuple[str, Forest]]:
    items = build_corpus(random_count=60, caterpillar_seeds=3)
    for n in range(2, 11, 2):
        for seed in range(2):
            items.append((f"spider-{n}-s{seed}",
                          generate(GenSpec("spider", n, seed=seed))))
            items.append((f"broom-{n}-s{seed}",
                          generate(GenSpec("broom", n, seed=seed))))
    return items

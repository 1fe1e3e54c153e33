from hypothesis import HealthCheck, assume, settings
from hypothesis import strategies as st

from fatforest.complexes import FatForestSpec

settings.register_profile(
    "exact",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    print_blob=True,
)
settings.load_profile("exact")


@st.composite
def forest_specs(
    draw,
    min_blocks=1,
    max_blocks=3,
    min_block=2,
    max_block=4,
    max_vertices=12,
    allow_explicit=True,
):
    """Random block-size lists with a random gluing schedule."""
    e = draw(st.integers(min_blocks, max_blocks))
    sizes = tuple(
        draw(st.integers(min_block, max_block), label=f"size{i}") for i in range(e)
    )
    assume(sum(sizes) - (e - 1) <= max_vertices)
    kinds = ["chain-distinct", "star"]
    if allow_explicit and e > 1:
        kinds.append("explicit")
    kind = draw(st.sampled_from(kinds))
    if kind != "explicit":
        return FatForestSpec(sizes, kind)
    pairs = []
    count = sizes[0]
    for i in range(2, e + 1):
        pairs.append((i, draw(st.integers(0, count - 1), label=f"glue{i}")))
        count += sizes[i - 1] - 1
    return FatForestSpec(sizes, tuple(pairs))

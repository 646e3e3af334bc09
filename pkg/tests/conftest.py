import itertools

import pytest


@pytest.fixture
def square_faces():
    return [((0,), 0), ((1,), 0), ((2,), 0), ((3,), 0),
            ((0, 1), 1), ((1, 2), 1), ((2, 3), 1), ((0, 3), 1), ((0, 1, 2, 3), 2)]


@pytest.fixture
def cube_faces():
    """The 26 proper faces of the 3-cube plus the cube, vertices numbered by 0/1 coordinates."""
    faces = []
    for pattern in itertools.product((0, 1, None), repeat=3):
        verts = [v for v in range(8) if all(s is None or (v >> k) & 1 == s for k, s in enumerate(pattern))]
        faces.append((tuple(verts), sum(s is None for s in pattern)))
    return faces

import pytest

from hopfimage import groups
from hopfimage.corpus import star_group_algebra
from hopfimage.scalars import cyclotomic_field


@pytest.fixture(scope="session")
def omega():
    return cyclotomic_field(3)


@pytest.fixture(scope="session")
def s3():
    return star_group_algebra("S3"), groups.symmetric3_table()

import math

import pandas as pd
import pytest

from src.config import RunConfig
from src.errors import CapacityError, DomainError
from src.volume import VolumeService
from src.volume_cache import VolumeCache


def make_service(tmp_path=None, **overrides) -> VolumeService:
    cache = tmp_path / "volumes.csv" if tmp_path is not None else None
    return VolumeService.from_config(RunConfig(cache_path=cache, **overrides))


def test_volume_routing():
    service = make_service()
    assert service.compute_volume(1, 5) == (8, "dp")
    assert service.compute_volume(4, 5) == (120, "factorial")
    assert service.compute_volume(2, 6, engine="enumerate") == (73, "enumerate")


def test_volume_falls_back_to_ryser_past_the_window():
    service = make_service(window_limit=2)
    volume, used = service.compute_volume(3, 8)
    assert used == "ryser"
    assert volume == make_service().compute_volume(3, 8)[0]


def test_volume_capacity_error_when_no_engine_fits():
    service = make_service(window_limit=2, ryser_limit=5, enumeration_budget=10)
    with pytest.raises(CapacityError):
        service.compute_volume(3, 8)


def test_volume_domain():
    with pytest.raises(DomainError):
        make_service().ball_volume(-1, 4)
    with pytest.raises(DomainError):
        make_service().ball_volume(1, 4, engine="magic")


def test_all_engines_report_failures():
    service = make_service(enumeration_budget=100)
    results = dict(service.all_engines(2, 7))
    assert results["dp"] == results["ryser"] == 172
    assert isinstance(results["enumerate"], CapacityError)


def test_large_volume_is_exact():
    volume = make_service().ball_volume(1, 200)
    a, b = 1, 1
    for _ in range(200):
        a, b = b, a + b
    assert volume == a


def test_cache_round_trip(tmp_path):
    service = make_service(tmp_path)
    assert service.ball_volume_report(2, 9) == (932, "dp")
    frame = pd.read_csv(tmp_path / "volumes.csv", dtype=str)
    assert list(frame.columns) == ["d", "n", "volume"]
    assert len(frame) == 1

    reloaded = make_service(tmp_path)
    assert reloaded.ball_volume_report(2, 9)[1] == "cache"
    # already cached rows are not appended again
    assert len(pd.read_csv(tmp_path / "volumes.csv", dtype=str)) == 1


def test_cache_keeps_big_integers_exact(tmp_path):
    service = make_service(tmp_path)
    volume = service.ball_volume(3, 60)
    assert volume > 2 ** 64
    assert (tmp_path / "volumes.csv").read_text(encoding="utf-8").strip().endswith(str(volume))
    reloaded = make_service(tmp_path)
    assert reloaded.cache.get(3, 60) == volume


def test_cache_reloads_volumes_with_thousands_of_digits(tmp_path):
    volume = make_service(tmp_path).ball_volume(1, 25000)
    assert len(str(volume)) > 5000
    reloaded = make_service(tmp_path)
    assert len(reloaded.cache) == 1
    assert reloaded.cache.get(1, 25000) == volume


def test_corrupt_cache_is_discarded(tmp_path):
    path = tmp_path / "volumes.csv"
    path.write_text("d,n,volume\n1,5,9\n", encoding="utf-8")
    service = make_service(tmp_path)
    assert len(service.cache) == 0
    assert service.ball_volume_report(1, 5) == (8, "dp")


def test_spot_check_samples_at_least_one_row(tmp_path):
    cache = VolumeCache(tmp_path / "volumes.csv")
    for n in range(1, 11):
        cache.put(1, n, 1)
    seen = []

    def recompute(d, n):
        seen.append((d, n))
        return 1

    assert cache.spot_check(recompute, seed=5)
    assert len(seen) == 1


def test_spot_check_skips_rows_it_cannot_recompute(tmp_path):
    cache = VolumeCache(tmp_path / "volumes.csv")
    cache.put(1, 5, 8)
    cache.put(9, 99, 12345)
    assert cache.spot_check(lambda d, n: 8 if (d, n) == (1, 5) else None)
    assert len(cache) == 2


def test_permanent_routing():
    from src.structmat import build_klove_matrix, build_omega_matrix

    service = make_service()
    value, used = service.permanent(build_klove_matrix(1, 3))
    assert (value, used) == (8, "dp")
    poly, used = service.permanent(build_omega_matrix(2))
    assert used == "expand"
    assert poly.to_list() == [2, 6, 1]
    value, used = service.permanent(build_omega_matrix(2).substitute(2))
    assert (value, used) == (18, "expand")


def test_factorial_shortcut():
    assert make_service().ball_volume(9, 7) == math.factorial(7)

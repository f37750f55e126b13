import pytest
from unittest.mock import patch

from src.services.report_service import RANDOM_CHAIN_COUNT, ReportService
from src.utils.errors import CocoaKitError


@pytest.fixture
def service(test_config):
    with patch('src.services.report_service.ConfigManager') as mock_config_manager:
        mock_config_manager.return_value.load_config.return_value = test_config
        yield ReportService()


class TestReportService:

    def test_init(self, service):
        """Workers and seed come from the config"""
        assert service.max_workers == 2
        assert service.seed == 0

    def test_theorem1(self, service):
        report = service.build("theorem1")

        assert len(report.rows) == 6
        for k, chain_states, dpw_states in [(1, 2, 2), (2, 4, 4), (3, 6, 8)]:
            chain_row = report.find("theorem1", k, "cocoa")
            dpw_row = report.find("theorem1", k, "dpw")
            assert chain_row.states == chain_states
            assert chain_row.colors == k
            assert dpw_row.states == dpw_states
            assert dpw_row.bound == 2 ** k
            assert dpw_row.residuals == 1
            assert dpw_row.wall_ms is not None

    def test_theorem2(self, service):
        report = service.build("theorem2", kmax=2)

        full = report.find("theorem2", 2, "cocoa-full")
        reduced = report.find("theorem2", 2, "cocoa-nondominated")
        assert full.residuals == 4
        assert full.states == 12 + 8 + 32 + 4
        assert reduced.states < full.states
        assert reduced.note.startswith("differs at levels 1")
        assert report.find("theorem2", 2, "dpw") is not None

    def test_prop1(self, service):
        report = service.build("prop1", kmax=2)
        assert report.find("prop1", 2, "dpw").states == 1
        assert report.find("prop1", 2, "dpw").colors == 2
        assert report.find("prop1", 2, "cocoa").states == 2

    def test_prop2_includes_random_chains(self, service):
        report = service.build("prop2", kmax=1)

        assert len(report.rows) == 1 + RANDOM_CHAIN_COUNT
        product = report.find("prop2", 1, "cocoa-c-product")
        assert product.states == 2
        assert product.bound == 9
        random_row = report.find("prop2-random", 1, "product")
        assert random_row.note.startswith("members ")
        assert random_row.states <= random_row.bound

    def test_prop4(self, service):
        report = service.build("prop4", kmax=2)
        for k in (1, 2):
            assert report.find("prop4", k, "dpw-p").residuals == 2 ** k
            assert report.find("prop4", k, "dpw-phat").states == 2 ** k

    @pytest.mark.parametrize("which,kmax", [("theorem9", 2), ("prop1", 0)])
    def test_build_errors(self, service, which, kmax):
        with pytest.raises(CocoaKitError):
            service.build(which, kmax)

    def test_render_csv(self, service):
        report = service.build("prop1", kmax=1)
        lines = service.render(report, "csv").splitlines()

        assert lines[0] == "family,k,representation,states,colors,residuals,bound,note"
        assert lines[1] == "prop1,1,cocoa,1,1,,,"
        assert lines[2] == "prop1,1,dpw,1,1,,,"

    def test_render_csv_timing(self, service):
        report = service.build("prop1", kmax=1)
        header = service.render(report, "csv", timing=True).splitlines()[0]
        assert header.endswith(",note,wall_ms")

    def test_render_text(self, service):
        """Text tables always carry the wall time column"""
        text = service.render(service.build("prop1", kmax=1))
        assert text.splitlines()[0].startswith("| family")
        assert "wall_ms" in text

"""pytest配置文件

包含全局测试配置和共享夹具
"""

import copy
import sys
from pathlib import Path

import pytest

# 添加src目录到Python路径
src_path = Path(__file__).parent.parent / "src"
sys.path.insert(0, str(src_path))

from infrastructure.config.app_config import AppConfig  # noqa: E402

# 测试期间不写日志文件
AppConfig().set('logging.filePath', '')


# 表格数据：d -> (p_c 下界, p̂_c 下界, 上界)
TABLE1 = {
    2: (0.6261364, 0.7103674, 0.7137989),
    3: (0.5835921, 0.6419859, 0.6428580),
    4: (0.5625890, 0.6071563, 0.6074957),
    5: (0.5500385, 0.5860557, 0.5862210),
    6: (0.5416859, 0.5719015, 0.5719940),
    7: (0.5357250, 0.5617475, 0.5618043),
    8: (0.5312564, 0.5541074, 0.5541448),
    9: (0.5277818, 0.5481503, 0.5481761),
    10: (0.5250027, 0.5433751, 0.5433937),
    20: (0.5125001, 0.5217793, 0.5217815),
    50: (0.5050000, 0.5087345, 0.5087346),
    100: (0.5025000, 0.5043711, 0.5043711),
}


@pytest.fixture
def table1():
    """表格中的 12 行"""
    return dict(TABLE1)


@pytest.fixture
def appConfig():
    """配置单例；测试结束后恢复原值"""
    instance = AppConfig()
    snapshot = copy.deepcopy(instance._configData)  # pylint: disable=protected-access
    yield instance
    instance._configData = snapshot  # pylint: disable=protected-access


@pytest.fixture
def polynomialService(appConfig):  # pylint: disable=redefined-outer-name
    from business.services.polynomial_service import PolynomialService
    return PolynomialService(appConfig)


@pytest.fixture
def boundsService(appConfig, polynomialService):  # pylint: disable=redefined-outer-name
    from business.services.bounds_service import BoundsService
    return BoundsService(appConfig, polynomialService)


@pytest.fixture
def renewalService(appConfig, polynomialService):  # pylint: disable=redefined-outer-name
    from business.services.renewal_service import RenewalService
    return RenewalService(appConfig, polynomialService)


@pytest.fixture
def branchingService(appConfig):  # pylint: disable=redefined-outer-name
    from business.services.branching_service import BranchingService
    return BranchingService(appConfig)


@pytest.fixture
def couplingService(appConfig, branchingService):  # pylint: disable=redefined-outer-name
    from business.services.coupling_service import CouplingService
    return CouplingService(appConfig, branchingService)


@pytest.fixture
def simulationService(appConfig, boundsService):  # pylint: disable=redefined-outer-name
    from business.services.simulation_service import SimulationService
    return SimulationService(appConfig, boundsService)

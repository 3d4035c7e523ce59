#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
命令行界面 - 界的计算、表格复现、级数求解、模拟、耦合检查与证书

所有命令把结果按行写到标准输出（或 --out 指定的文件），日志只走 stderr。
"""

from typing import Any, Callable, Dict, List, Optional

import click

from business.models.errors import CertificationError
from business.models.model_params import ModelParams, ReturnProb
from business.models.simulation import SimConfig
from business.services.bounds_service import BoundsService
from business.services.coupling_service import CouplingService
from business.services.polynomial_service import APPENDIX_DEGREES, PolynomialService
from business.services.renewal_service import RenewalService
from business.services.simulation_service import SimulationService
from data.export.record_writer import FORMATS, RecordWriter, writeCsvFile
from infrastructure.config.app_config import config
from infrastructure.logging.logger import configureLogging, getLogger
from infrastructure.utils.helpers import RangeHelper

# 耦合检查出现支配违例时的退出码
EXIT_VIOLATION = 3

TABLE_COLUMNS = ('d', 'lb_pc', 'lb_pc_hat', 'ub_pc')
LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


class DegreeList(click.ParamType):
    """--d 参数：单个整数、a..b 区间或逗号分隔的组合"""

    name = 'degrees'

    def convert(self, value, param, ctx) -> List[int]:
        if isinstance(value, list):
            return value
        try:
            return RangeHelper.parseDegreeList(str(value))
        except ValueError as error:
            self.fail(str(error), param, ctx)


def outputOptions(command: Callable) -> Callable:
    """--format 与 --out"""
    command = click.option(
        '--out', 'out', type=click.Path(dir_okay=False), default=None,
        help='输出文件路径（默认标准输出）'
    )(command)
    command = click.option(
        '--format', 'outputFormat', type=click.Choice(FORMATS),
        default=lambda: config.get('output.format', 'csv'), show_default='csv',
        help='输出格式'
    )(command)
    return command


def simulationOptions(command: Callable) -> Callable:
    """模拟类命令共用的参数"""
    options = [
        click.option('--variant', type=click.Choice(['full', 'oriented']), default='full',
                     help='模型变体'),
        click.option('--replicas', type=click.IntRange(min=1),
                     default=lambda: config.get('simulation.replicas', 100), help='副本数 R'),
        click.option('--max-activations', 'maxActivations', type=click.IntRange(min=1),
                     default=lambda: config.get('simulation.maxActivations', 10000),
                     help='激活上限 A'),
        click.option('--max-steps', 'maxSteps', type=click.IntRange(min=1),
                     default=lambda: config.get('simulation.maxSteps', 10000000),
                     help='全局步数上限'),
        click.option('--seed', type=click.IntRange(min=0, max=2 ** 64 - 1),
                     default=lambda: config.get('simulation.seed', 0), help='随机种子'),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def emit(rows: List[Dict[str, Any]], outputFormat: str, out: Optional[str],
         truncate: bool = False):
    """写出命令结果；界的表格按截断而非四舍五入给出小数"""
    with RecordWriter.open(out, outputFormat, config.decimals, truncate) as writer:
        writer.writeRows(rows)


@click.group()
@click.option('--log-level', 'logLevel', type=click.Choice(LOG_LEVELS, case_sensitive=False),
              default=None, help='日志级别（同时作用于控制台）')
@click.option('--debug', is_flag=True, default=False, help='调试模式')
@click.version_option(version=config.appVersion, prog_name=config.appName)
def cli(logLevel: Optional[str], debug: bool):
    """frogbound - 树上青蛙模型临界参数的界、级数求解与模拟"""
    if logLevel or debug:
        configureLogging(logLevel=(logLevel or 'DEBUG').upper(), debugMode=debug)


@cli.command()
@click.option('--d', 'degrees', type=DegreeList(), required=True, help='度数，如 5、2..4、2,3,10')
@outputOptions
def bounds(degrees: List[int], outputFormat: str, out: Optional[str]):
    """每个 d 的定理界与文献界"""
    service = BoundsService()
    emit([report.toDict() for report in service.reportsFor(degrees)], outputFormat, out,
         truncate=True)


@cli.command()
@outputOptions
def table(outputFormat: str, out: Optional[str]):
    """复现 12 行界的表格"""
    service = BoundsService()
    rows = []
    for report in service.reportsFor(service.table1Degrees):
        full = report.toDict()
        rows.append({column: full[column] for column in TABLE_COLUMNS})
    emit(rows, outputFormat, out, truncate=True)


@cli.command()
@click.option('--d', 'd', type=click.IntRange(min=2), required=True, help='度数')
@click.option('--tol', type=click.FloatRange(min=0.0, min_open=True),
              default=lambda: config.get('numerics.solveTolerance', 1e-10), help='区间宽度容差')
@outputOptions
def solve(d: int, tol: float, outputFormat: str, out: Optional[str]):
    """求解 S(r,d) = 1，给出 r_c 与 p̂_c 的包围区间"""
    bracket = RenewalService().solveRc(d, tol)
    pLo = BoundsService.pOfR(ReturnProb(bracket.lo, d))
    pHi = BoundsService.pOfR(ReturnProb(bracket.hi, d))
    emit([{
        'd': d,
        'r_lo': bracket.lo,
        'r_hi': bracket.hi,
        'p_hat_lo': pLo,
        'p_hat_hi': pHi,
        'p_hat': 0.5 * (pLo + pHi),
        'iterations': bracket.iterations,
        'terms_used': bracket.termsUsed
    }], outputFormat, out)


@cli.command()
@click.option('--d', 'd', type=click.IntRange(min=2), required=True, help='度数')
@click.option('--p', 'p', type=click.FloatRange(0.0, 1.0), required=True, help='寿命参数')
@simulationOptions
@click.option('--replica-csv', 'replicaCsv', type=click.Path(dir_okay=False), default=None,
              help='逐副本结果的 CSV 路径')
@outputOptions
def simulate(d: int, p: float, variant: str, replicas: int, maxActivations: int,
             maxSteps: int, seed: int, replicaCsv: Optional[str],
             outputFormat: str, out: Optional[str]):
    """蒙特卡罗存活频率与 Wilson 区间"""
    simConfig = SimConfig(d=d, p=p, variant=variant, maxActivations=maxActivations,
                          maxSteps=maxSteps, replicas=replicas, seed=seed)
    service = SimulationService()
    outcomes = service.runReplicas(simConfig)
    estimate = service.survivalFrequency(simConfig, outcomes)
    if replicaCsv:
        writeCsvFile(replicaCsv, [outcome.toRow(index) for index, outcome in enumerate(outcomes)],
                     config.decimals)

    row = {'d': d, 'p': p, 'variant': variant, 'max_activations': maxActivations, 'seed': seed}
    row.update(estimate.toDict())
    emit([row], outputFormat, out)


@cli.command()
@click.option('--d', 'd', type=click.IntRange(min=2), required=True, help='度数')
@click.option('--p', 'p', type=click.FloatRange(0.0, 1.0, min_open=True, max_open=True),
              required=True, help='寿命参数 p ∈ (0,1)')
@click.option('--steps', type=click.IntRange(min=1),
              default=lambda: config.get('coupling.maxSteps', 10000), help='耦合步数上限')
@click.option('--seed', type=click.IntRange(min=0, max=2 ** 64 - 1), default=0, help='第一个随机种子')
@click.option('--runs', type=click.IntRange(min=1), default=1, help='连续种子的运行次数')
@click.option('--trace-csv', 'traceCsv', type=click.Path(dir_okay=False), default=None,
              help='逐步轨迹的 CSV 路径（仅第一次运行）')
@outputOptions
def couple(d: int, p: float, steps: int, seed: int, runs: int, traceCsv: Optional[str],
           outputFormat: str, out: Optional[str]) -> int:
    """耦合检查；存在违例时退出码为 3"""
    service = CouplingService()
    params = ModelParams(d, p)
    traces = [service.runCoupled(params, steps, seed, keepStates=bool(traceCsv))]
    traces += service.runMany(params, [seed + offset for offset in range(1, runs)], steps,
                              keepStates=False)
    if traceCsv:
        writeCsvFile(traceCsv, [state.toRow() for state in traces[0].states], config.decimals)

    emit([trace.summary() for trace in traces], outputFormat, out)
    violations = sum(trace.violations for trace in traces)
    if violations:
        getLogger('cli').error(f"d={d}, p={p}: 支配不等式违例 {violations} 次")
        return EXIT_VIOLATION
    return 0


@cli.command()
@click.option('--d', 'degrees', type=DegreeList(), default='2..6', show_default=True,
              help='逐度数检查的范围')
@click.option('--appendix', is_flag=True, default=False, help='只输出附录多项式证书')
@click.option('--a', 'a', type=click.FloatRange(min=1.0), default=1.75, show_default=True,
              help='单调性比较 l(d) > r(a·d) 中的 a')
@outputOptions
def certify(degrees: List[int], appendix: bool, a: float, outputFormat: str, out: Optional[str]):
    """精确证书：附录多项式、闭式上界的符号与单调性比较"""
    polynomialService = PolynomialService()
    if appendix:
        certificate = polynomialService.appendixCertificate()
        emit([{
            'degrees': f"{APPENDIX_DEGREES[0]}..{APPENDIX_DEGREES[-1]}",
            'values': ';'.join(str(value) for value in certificate['values'].values()),
            'cauchy_bound': certificate['cauchy_bound'],
            'positive': certificate['positive'],
            'certified': certificate['certified']
        }], outputFormat, out)
        if not certificate['certified']:
            raise CertificationError("附录多项式证书未通过")
        return

    boundsService = BoundsService(polynomialService=polynomialService)
    rows = []
    for d in degrees:
        rows.append({
            'd': d,
            'upper_closed_form': polynomialService.certifyUpperClosedForm(d),
            'refined_comparison': polynomialService.certifyRefinedComparison(d),
            'monotone_window': polynomialService.uMonotoneWindow(d),
            'monotonicity_gap': boundsService.monotonicityGap(d, a)
        })
    emit(rows, outputFormat, out)


@cli.command()
@click.option('--d', 'd', type=click.IntRange(min=2), required=True, help='度数')
@simulationOptions
@click.option('--tol', type=click.FloatRange(min=0.005), default=0.01, show_default=True,
              help='二分区间宽度')
@outputOptions
def estimate(d: int, variant: str, replicas: int, maxActivations: int, maxSteps: int,
             seed: int, tol: float, outputFormat: str, out: Optional[str]):
    """经验临界参数区间（启发式，不是严格包围）"""
    bracket = SimulationService().estimatePc(d, variant, maxActivations, replicas, tol, seed, maxSteps)
    emit([{
        'd': d,
        'variant': variant,
        'p_lo': bracket.pLo,
        'p_hi': bracket.pHi,
        'evaluations': bracket.evaluations
    }], outputFormat, out)

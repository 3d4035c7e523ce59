#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
应用主入口 - 运行命令行并把异常映射为退出码

    0 成功，1 用法或参数错误，2 数值失败，3 耦合支配违例
"""

import sys
from pathlib import Path
from typing import List, Optional

# 添加src目录到Python路径
srcPath = Path(__file__).parent
if str(srcPath) not in sys.path:
    sys.path.insert(0, str(srcPath))

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERIC = 2


# 延迟导入，sys.path 设置完成后再加载各层
def getImports():
    """获取所需的导入模块"""
    import click

    from business.models.errors import FrogboundError
    from business.validators.param_validator import ValidationError
    from cli.commands import cli
    from infrastructure.logging.logger import getLogger

    return click, FrogboundError, ValidationError, cli, getLogger


def main(argv: Optional[List[str]] = None) -> int:
    """主函数

    Args:
        argv: 命令行参数，None 表示 sys.argv[1:]

    Returns:
        int: 退出码
    """
    click, FrogboundError, ValidationError, cli, getLogger = getImports()
    logger = getLogger('main')

    try:
        result = cli.main(args=argv, prog_name='frogbound', standalone_mode=False)
        return result if isinstance(result, int) else EXIT_OK

    except click.exceptions.Exit as exitRequest:
        return exitRequest.exit_code

    except click.exceptions.Abort:
        print("\n已中断", file=sys.stderr)
        return EXIT_USAGE

    except click.exceptions.ClickException as usageError:
        usageError.show()
        return EXIT_USAGE

    except ValidationError as validationError:
        print(f"参数错误: {validationError}", file=sys.stderr)
        return EXIT_USAGE

    except FrogboundError as numericError:
        logger.error(f"{type(numericError).__name__}: {numericError.message}")
        print(f"数值失败: {numericError.message}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == '__main__':
    sys.exit(main())

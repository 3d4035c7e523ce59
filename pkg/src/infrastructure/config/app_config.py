#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
应用配置管理 - 统一管理数值、模拟与输出配置
"""

import json
import os
import sys
from pathlib import Path
from typing import Any, Dict


class AppConfig:
    """应用配置管理器"""

    _instance = None
    _configData = None

    def __new__(cls):
        """单例模式"""
        if cls._instance is None:
            cls._instance = super(AppConfig, cls).__new__(cls)
        return cls._instance

    def __init__(self):
        if self._configData is None:
            self._loadConfig()

    @staticmethod
    def _defaults() -> Dict[str, Any]:
        """默认配置"""
        return {
            'app': {
                'name': 'frogbound',
                'version': '1.0.0',
                'debug': False
            },
            'numerics': {
                'seriesTolerance': 1e-13,
                'solveTolerance': 1e-10,
                'rootTolerance': 1e-15,
                'maxSeriesTerms': 2000000,
                'maxBisectionSteps': 200
            },
            'simulation': {
                'maxActivations': 10000,
                'maxSteps': 10000000,
                'replicas': 100,
                'seed': 0,
                'threads': 1,
                'maxVertices': 1000000,
                'survivalThreshold': 0.01,
                'confidenceLevel': 0.95,
                'maxWalkSteps': 10000
            },
            'coupling': {
                'maxSteps': 10000,
                'seedingRetryCap': 100000
            },
            'output': {
                'decimals': 7,
                'format': 'csv'
            },
            'logging': {
                'level': 'INFO',
                'consoleLevel': 'WARNING',
                'filePath': 'logs/frogbound.log',
                'maxFileSize': 10485760,  # 10MB
                'backupCount': 5,
                'format': (
                    '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
                )
            }
        }

    def _loadConfig(self):
        """加载配置文件"""
        self._configData = self._defaults()

        # 尝试加载配置文件
        configFile = self._getConfigFilePath()
        if configFile.exists():
            try:
                with open(configFile, 'r', encoding='utf-8') as f:
                    fileConfig = json.load(f)
                    self._mergeConfig(fileConfig)
            except (OSError, json.JSONDecodeError) as loadError:
                print(f"加载配置文件失败: {loadError}", file=sys.stderr)

        self._applyEnvironment()

    def _getConfigFilePath(self) -> Path:
        """获取配置文件路径"""
        # 优先使用环境变量指定的配置文件
        configPath = os.getenv('FROGBOUND_CONFIG_PATH')
        if configPath:
            return Path(configPath)

        # 默认配置文件路径
        return Path('config/frogbound.json')

    def _mergeConfig(self, fileConfig: Dict[str, Any]):
        """合并配置"""
        for section, values in fileConfig.items():
            if section in self._configData and isinstance(values, dict):
                self._configData[section].update(values)
            else:
                self._configData[section] = values

    def _applyEnvironment(self):
        """应用环境变量覆盖（FROGBOUND_THREADS 限制并行度）"""
        threads = os.getenv('FROGBOUND_THREADS')
        if not threads:
            return

        try:
            threadCount = int(threads)
        except ValueError:
            threadCount = 0

        if threadCount >= 1:
            self.set('simulation.threads', threadCount)
        else:
            print(f"忽略无效的 FROGBOUND_THREADS: {threads!r}", file=sys.stderr)

    def get(self, key: str, default: Any = None) -> Any:
        """获取配置值

        Args:
            key: 配置键，支持点号分隔的嵌套键，如 'numerics.solveTolerance'
            default: 默认值

        Returns:
            Any: 配置值
        """
        keys = key.split('.')
        value = self._configData

        try:
            for k in keys:
                value = value[k]
            return value
        except (KeyError, TypeError):
            return default

    def set(self, key: str, value: Any):
        """设置配置值

        Args:
            key: 配置键，支持点号分隔的嵌套键
            value: 配置值
        """
        keys = key.split('.')
        config = self._configData

        # 导航到最后一级的父级
        for k in keys[:-1]:
            if k not in config:
                config[k] = {}
            config = config[k]

        config[keys[-1]] = value

    def reload(self):
        """重新加载配置"""
        self._configData = None
        self._loadConfig()

    # 便捷方法
    @property
    def appName(self) -> str:
        """应用名称"""
        return self.get('app.name', 'frogbound')

    @property
    def appVersion(self) -> str:
        """应用版本"""
        return self.get('app.version', '1.0.0')

    @property
    def debugMode(self) -> bool:
        """调试模式"""
        return self.get('app.debug', False)

    @property
    def threads(self) -> int:
        """模拟并行度上限"""
        return int(self.get('simulation.threads', 1))

    @property
    def decimals(self) -> int:
        """输出小数位数（与表格精度一致）"""
        return int(self.get('output.decimals', 7))


# 全局配置实例
config = AppConfig()

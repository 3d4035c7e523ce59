"""测试夹具模块

- test_helpers.py: 命令行运行、CSV/JSON 解析与随机样本生成
"""

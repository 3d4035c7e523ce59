"""集成测试模块

通过 main() 入口运行命令行：
- test_cli.py: 各命令的输出格式与退出码
- test_acceptance.py: 表格复现、证书与模拟的验收检查
"""

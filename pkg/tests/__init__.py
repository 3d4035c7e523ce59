"""测试模块初始化文件

这个包包含了项目的所有测试代码，按照以下结构组织：
- unit/: 单元测试
- integration/: 命令行与验收测试
- fixtures/: 测试辅助函数
- conftest.py: pytest配置和共享夹具
"""

"""单元测试模块

包含对各个模块和类的单元测试：
- test_business/: 业务逻辑层测试
- test_data/: 数据访问层测试
- test_infrastructure/: 基础设施层测试
- test_ui/: UI组件单元测试
"""
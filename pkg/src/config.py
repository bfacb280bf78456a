import os
import logging
from typing import Dict, Any, Optional

from src.errors import ArgumentError

logger = logging.getLogger(__name__)

_LOG_LEVELS = {
    'DEBUG': logging.DEBUG,
    'INFO': logging.INFO,
    'WARNING': logging.WARNING,
    'ERROR': logging.ERROR,
}


class BaseRunConfig:
    """运行配置基类"""
    APP_NAME = "fermat_torus"
    DEFAULT_LOG_LEVEL = 'WARNING'

    def __init__(self):
        """从环境变量读取配置"""
        self.THREADS = self._parse_threads(os.environ.get('FERMAT_TORUS_THREADS'))
        self.LOG_LEVEL = os.environ.get('FERMAT_TORUS_LOG_LEVEL', self.DEFAULT_LOG_LEVEL).upper()
        self.LOG_DIR: Optional[str] = os.environ.get('FERMAT_TORUS_LOG_DIR') or None

        if self.LOG_LEVEL not in _LOG_LEVELS:
            raise ArgumentError(f"无效的日志级别 FERMAT_TORUS_LOG_LEVEL={self.LOG_LEVEL}")

    @staticmethod
    def _parse_threads(raw: Optional[str]) -> int:
        """解析线程数，未设置时使用机器CPU核心数"""
        if raw is None or raw.strip() == "":
            return os.cpu_count() or 1
        try:
            threads = int(raw)
        except ValueError:
            raise ArgumentError(f"FERMAT_TORUS_THREADS 必须是正整数: {raw!r}") from None
        if threads < 1:
            raise ArgumentError(f"FERMAT_TORUS_THREADS 必须是正整数: {raw!r}")
        return threads

    @property
    def log_level(self) -> int:
        """logging模块使用的日志级别"""
        return _LOG_LEVELS[self.LOG_LEVEL]

    @property
    def log_to_file(self) -> bool:
        """配置了日志目录时才写日志文件"""
        return self.LOG_DIR is not None

    def to_dict(self) -> Dict[str, Any]:
        """转换配置为字典"""
        return {key: getattr(self, key) for key in dir(self)
                if key.isupper() and not key.startswith('_')}


class LocalRunConfig(BaseRunConfig):
    """本地运行配置"""
    ENV = 'local'


class CIRunConfig(BaseRunConfig):
    """持续集成环境配置"""
    ENV = 'ci'
    DEFAULT_LOG_LEVEL = 'INFO'


class ProductionRunConfig(BaseRunConfig):
    """批量复现环境配置"""
    ENV = 'production'

    def __init__(self):
        """生产环境必须显式设置线程数和日志目录"""
        super().__init__()
        required_vars = ['FERMAT_TORUS_THREADS', 'FERMAT_TORUS_LOG_DIR']
        missing_vars = [var for var in required_vars if not os.environ.get(var)]
        if missing_vars:
            raise ArgumentError(f"生产环境缺少必要的环境变量: {', '.join(missing_vars)}")


def get_config_by_name(name: str) -> BaseRunConfig:
    """根据环境名称获取相应的配置对象"""
    config_classes = {
        'local': LocalRunConfig,
        'ci': CIRunConfig,
        'production': ProductionRunConfig,
    }

    config_class = config_classes.get(name, LocalRunConfig)
    try:
        return config_class()
    except ArgumentError as e:
        # 生产环境变量缺失时回退到本地配置，其它错误照常抛出
        if config_class is ProductionRunConfig and "生产环境缺少必要的环境变量" in str(e):
            logger.warning(f"{e}. 使用本地配置替代。")
            return LocalRunConfig()
        raise


def get_run_config() -> BaseRunConfig:
    """获取当前环境的运行配置"""
    env = os.environ.get('FERMAT_TORUS_ENV', 'local')
    logger.debug(f"当前环境: {env}")
    return get_config_by_name(env)

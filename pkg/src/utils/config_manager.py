import os
import re
import yaml
from typing import Dict, Any
from pathlib import Path
import logging

from dotenv import load_dotenv


DEFAULT_CONFIG_NAME = "cocoakit"

TABLE_NAMES = ("theorem1", "theorem2", "prop1", "prop2", "prop4")

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class ConfigManager:
    """Centralized configuration management"""

    def __init__(self, config_dir: str = "config"):
        self.config_dir = Path(config_dir)
        self.logger = logging.getLogger("cocoakit.config")
        self._config_cache = {}
        load_dotenv()

    def load_config(self, config_name: str = DEFAULT_CONFIG_NAME) -> Dict[str, Any]:
        """Load configuration from YAML file with environment variable substitution"""
        if config_name in self._config_cache:
            return self._config_cache[config_name]

        config_file = self.config_dir / f"{config_name}.yaml"

        if not config_file.exists():
            self.logger.warning(f"Config file {config_file} not found, using default config")
            return self._get_default_config()

        try:
            with open(config_file, 'r') as f:
                config_content = f.read()

            config_content = self._substitute_env_vars(config_content)

            config = yaml.safe_load(config_content) or {}
            config = self._merge_defaults(config)
            self._config_cache[config_name] = config
            return config

        except (OSError, yaml.YAMLError) as e:
            self.logger.error(f"Failed to load config {config_name}: {e}")
            return self._get_default_config()

    def _substitute_env_vars(self, content: str) -> str:
        """Substitute ${VAR} and ${VAR:default} occurrences"""
        pattern = r'\$\{([^}]+)\}'

        def replacer(match):
            var_spec = match.group(1)

            if ':' in var_spec:
                var_name, default_value = var_spec.split(':', 1)
                return os.environ.get(var_name, default_value)

            value = os.environ.get(var_spec)
            if value is None:
                self.logger.warning(f"Environment variable {var_spec} not set")
                return match.group(0)
            return value

        return re.sub(pattern, replacer, content)

    def _get_default_config(self) -> Dict[str, Any]:
        """Get default configuration"""
        return {
            'sampling': {
                'seed': int(os.environ.get('COCOAKIT_SEED', 0)),
                'max_stem': 2,
                'max_loop': 3,
                'large_alphabet_threshold': 8,
                'large_alphabet_max_stem': 1,
                'large_alphabet_max_loop': 2,
                'random_count': 10000
            },
            'tables': {
                'max_workers': 4,
                'kmax': {
                    'theorem1': 4,
                    'theorem2': 2,
                    'prop1': 4,
                    'prop2': 3,
                    'prop4': 4
                }
            },
            'logging': {
                'level': 'INFO',
                'console_level': 'WARNING',
                'file': 'logs/cocoakit.log',
                'max_file_size': '10MB',
                'backup_count': 5
            }
        }

    def _merge_defaults(self, config: Dict[str, Any]) -> Dict[str, Any]:
        merged = self._get_default_config()
        for section, values in config.items():
            if isinstance(values, dict) and isinstance(merged.get(section), dict):
                merged[section].update(values)
            else:
                merged[section] = values
        return merged

    def get_sampling_config(self) -> Dict[str, Any]:
        """Get lasso sampling configuration"""
        return self.load_config().get('sampling', {})

    def get_seed(self) -> int:
        return int(self.get_sampling_config().get('seed', 0))

    def get_table_config(self) -> Dict[str, Any]:
        return self.load_config().get('tables', {})

    def get_kmax(self, table: str) -> int:
        """Default kmax for a size table"""
        kmax = self.get_table_config().get('kmax', {})
        return int(kmax.get(table, self._get_default_config()['tables']['kmax'].get(table, 2)))

    def get_logging_config(self) -> Dict[str, Any]:
        return self.load_config().get('logging', {})

    def validate_config(self) -> Dict[str, Any]:
        """Validate configuration and return validation results"""
        results = {
            'valid': True,
            'errors': [],
            'warnings': []
        }

        config = self.load_config()

        for section in ('sampling', 'tables', 'logging'):
            if not isinstance(config.get(section), dict):
                results['errors'].append(f"Section '{section}' must be a dictionary")
                results['valid'] = False

        if not results['valid']:
            return results

        sampling = config['sampling']
        try:
            int(sampling.get('seed', 0))
        except (TypeError, ValueError):
            results['errors'].append(f"sampling.seed must be an integer, got {sampling.get('seed')!r}")
            results['valid'] = False

        for field in ('max_stem', 'max_loop', 'large_alphabet_max_stem',
                      'large_alphabet_max_loop', 'random_count'):
            value = sampling.get(field)
            if not isinstance(value, int) or value < 0:
                results['errors'].append(f"sampling.{field} must be a non-negative integer")
                results['valid'] = False

        for field in ('max_loop', 'large_alphabet_max_loop'):
            if sampling.get(field) == 0:
                results['errors'].append(f"sampling.{field} must be at least 1")
                results['valid'] = False

        tables = config['tables']
        workers = tables.get('max_workers')
        if not isinstance(workers, int) or workers < 1:
            results['errors'].append("tables.max_workers must be a positive integer")
            results['valid'] = False

        for table, kmax in (tables.get('kmax') or {}).items():
            if table not in TABLE_NAMES:
                results['warnings'].append(f"Unknown table '{table}' in tables.kmax")
            elif not isinstance(kmax, int) or kmax < 1:
                results['errors'].append(f"tables.kmax.{table} must be a positive integer")
                results['valid'] = False
            elif table == 'theorem2' and kmax > 2:
                results['warnings'].append("tables.kmax.theorem2 above 2 may take minutes")

        log_config = config['logging']
        for field in ('level', 'console_level'):
            level = str(log_config.get(field, 'INFO')).upper()
            if level not in LOG_LEVELS:
                results['errors'].append(f"logging.{field} '{level}' is not a log level")
                results['valid'] = False
        if not log_config.get('file'):
            results['warnings'].append("logging.file is empty, JSON log disabled")

        return results

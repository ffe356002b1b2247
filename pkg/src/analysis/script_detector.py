"""
文字系统检测器 - 判断一个词属于哪种书写系统

支持策略:
1. 数字串（含内部 . , 分隔符）
2. 标点符号
3. 阿拉伯字母占比
4. 拉丁字母占比
"""

import re
import unicodedata
from typing import Optional, Dict
import logging

logger = logging.getLogger(__name__)


class ScriptDetector:
    """多策略书写系统检测器"""

    # 书写系统到 Unicode 区段的映射
    SCRIPT_RANGES: Dict[str, tuple] = {
        'arabic': (
            (0x0600, 0x06FF),
            (0x0750, 0x077F),
            (0x08A0, 0x08FF),
            (0xFB50, 0xFDFF),
            (0xFE70, 0xFEFF),
        ),
        'latin': (
            (0x0041, 0x005A),
            (0x0061, 0x007A),
            (0x00C0, 0x024F),
        ),
    }

    def __init__(self):
        """初始化检测器"""
        # 编译数字串正则
        self.number_pattern = re.compile(r'^\d+(?:[.,،]\d+)*$')

    def _char_script(self, char: str) -> Optional[str]:
        code = ord(char)
        for script, ranges in self.SCRIPT_RANGES.items():
            if any(low <= code <= high for low, high in ranges):
                return script
        return None

    def is_number(self, word: str) -> bool:
        return bool(self.number_pattern.match(word))

    def is_punctuation(self, word: str) -> bool:
        return bool(word) and all(unicodedata.category(c)[0] in 'PS' for c in word)

    def detect_script(self, word: str) -> str:
        """
        检测一个词的书写系统

        Args:
            word: 单个词

        Returns:
            'digit' | 'punct' | 'arabic' | 'latin' | 'other'
        """
        if not word:
            return 'other'

        if self.is_number(word):
            return 'digit'

        if self.is_punctuation(word):
            return 'punct'

        counts: Dict[str, int] = {}
        for char in word:
            script = self._char_script(char)
            if script:
                counts[script] = counts.get(script, 0) + 1

        if not counts:
            return 'other'

        # 阿拉伯字母过半即视为阿拉伯文
        if counts.get('arabic', 0) * 2 >= sum(counts.values()):
            return 'arabic'
        return 'latin'


# 全局单例
_global_detector: Optional[ScriptDetector] = None


def get_script_detector() -> ScriptDetector:
    """
    获取全局检测器实例

    Returns:
        ScriptDetector 实例
    """
    global _global_detector
    if _global_detector is None:
        _global_detector = ScriptDetector()
    return _global_detector

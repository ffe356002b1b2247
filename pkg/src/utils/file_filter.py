"""
批量输入收集 - 将命令行给出的文件 / 目录展开为待处理文档列表

功能:
1. 目录递归扫描，跳过隐藏目录
2. 支持 gitignore 风格的 --exclude 模式
3. 按扩展名筛选（.txt 原文，.tok 预标注）
4. 结果排序，保证批量输出顺序确定
"""

from pathlib import Path
from typing import Iterable, Iterator, List, Optional, Set
import logging

try:
    import pathspec
    HAS_PATHSPEC = True
except ImportError:
    HAS_PATHSPEC = False
    logging.warning("pathspec not installed, --exclude patterns disabled")

logger = logging.getLogger(__name__)


class FileFilter:
    """输入文件过滤器"""

    DEFAULT_EXTENSIONS = {'.txt', '.tok'}

    def __init__(
        self,
        exclude_patterns: Optional[Iterable[str]] = None,
        include_extensions: Optional[Set[str]] = None,
    ):
        """
        初始化过滤器

        Args:
            exclude_patterns: gitignore 风格的排除模式
            include_extensions: 目录扫描时保留的扩展名（None 使用默认值）
        """
        self.include_extensions = include_extensions or set(self.DEFAULT_EXTENSIONS)
        self.patterns = [p for p in (exclude_patterns or []) if p.strip()]

        self.exclude_spec = None
        if HAS_PATHSPEC and self.patterns:
            self.exclude_spec = pathspec.PathSpec.from_lines(
                pathspec.patterns.GitWildMatchPattern,
                self.patterns,
            )
            logger.debug(f"Loaded {len(self.patterns)} exclude patterns")

    def is_excluded(self, path: Path, root: Optional[Path] = None, is_dir: bool = False) -> bool:
        """
        判断路径是否被排除

        Args:
            path: 文件或目录路径
            root: 扫描根目录，模式相对于它匹配
            is_dir: 目录路径（匹配 "name/" 形式的模式）
        """
        if self.exclude_spec is None:
            return False
        relative = path.relative_to(root) if root and path.is_relative_to(root) else path
        candidate = relative.as_posix() + ('/' if is_dir else '')
        return self.exclude_spec.match_file(candidate)

    def should_exclude_dir(self, dir_path: Path, root: Path) -> bool:
        """隐藏目录和匹配排除模式的目录不进入"""
        if dir_path.name.startswith('.'):
            return True
        return self.is_excluded(dir_path, root, is_dir=True)

    def scan_directory(self, root_path: Path) -> Iterator[Path]:
        """
        递归扫描目录

        Yields:
            符合扩展名且未被排除的文件
        """
        def _scan_recursive(current_path: Path):
            try:
                entries = sorted(current_path.iterdir())
            except PermissionError:
                logger.warning(f"Permission denied: {current_path}")
                return

            for entry in entries:
                if entry.is_dir():
                    if not self.should_exclude_dir(entry, root_path):
                        yield from _scan_recursive(entry)
                elif entry.is_file():
                    if entry.suffix.lower() not in self.include_extensions:
                        continue
                    if self.is_excluded(entry, root_path):
                        continue
                    yield entry

        yield from _scan_recursive(root_path)

    def collect(self, inputs: Iterable[str | Path]) -> List[Path]:
        """
        展开命令行输入

        显式给出的文件总是保留（除非匹配排除模式）；目录按扩展名扫描。
        不存在的路径原样保留，由读取阶段报告 I/O 错误。

        Returns:
            去重后的文件列表，保持命令行顺序，目录内按路径排序
        """
        seen: Set[Path] = set()
        files: List[Path] = []

        for item in inputs:
            path = Path(item)
            found = list(self.scan_directory(path)) if path.is_dir() else (
                [] if self.is_excluded(path) else [path]
            )
            for file_path in found:
                if file_path not in seen:
                    seen.add(file_path)
                    files.append(file_path)

        logger.info(f"Collected {len(files)} input files")
        return files

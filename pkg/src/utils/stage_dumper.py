"""
阶段数据导出

把流水线的中间结果（候选短语、特征、句子分数）写到 --dump-dir，
未指定目录时写到标准错误。文件名由输入名和阶段名决定，不含时间戳，
同样的输入总是得到同样的文件。
"""

import json
import re
import sys
import logging
from pathlib import Path
from typing import Any, Collection, Optional, TextIO

from keyphrases.feature_io import FeatureRow, feature_rows_to_csv, label_candidates
from summarizer.pipeline import KeyphraseExtraction
from summarizer.sentence_scorer import SentenceScores

logger = logging.getLogger(__name__)

DUMP_STAGES = ('candidates', 'features', 'scores')


class StageDumper:
    """中间结果导出器"""

    def __init__(self, dump_dir: Optional[Path] = None, stream: Optional[TextIO] = None):
        """
        初始化导出器

        Args:
            dump_dir: 输出目录（None 时写到 stream）
            stream: 备用输出流，默认标准错误
        """
        self.dump_dir = Path(dump_dir) if dump_dir else None
        self.stream = stream

        if self.dump_dir:
            self.dump_dir.mkdir(parents=True, exist_ok=True)
            logger.debug(f"Stage dumps go to {self.dump_dir}")

    @staticmethod
    def _safe_name(source_id: str) -> str:
        stem = Path(source_id).name if source_id else 'stdin'
        return re.sub(r'[^\w\-.]', '_', stem)

    def save(self, stage: str, source_id: str, content: str, suffix: str) -> Optional[Path]:
        """
        保存一个阶段的数据

        Args:
            stage: 阶段名
            source_id: 文档标识（用于文件名）
            content: 已渲染的内容
            suffix: 文件扩展名

        Returns:
            写入的文件路径；写到流时返回 None
        """
        if self.dump_dir is None:
            stream = self.stream or sys.stderr
            stream.write(f"# {stage}: {source_id or '<input>'}\n")
            stream.write(content)
            return None

        target = self.dump_dir / f"{self._safe_name(source_id)}.{stage}.{suffix}"
        target.write_text(content, encoding='utf-8')
        logger.info(f"Dumped {stage} to {target}")
        return target

    @staticmethod
    def _to_json(data: Any) -> str:
        return json.dumps(data, ensure_ascii=False, indent=2, sort_keys=True) + "\n"

    def dump_candidates(self, source_id: str, extraction: KeyphraseExtraction) -> Optional[Path]:
        """候选短语及其全部出现位置"""
        data = [
            {
                "abstract_form": c.abstract_form,
                "surface_example": c.surface_example,
                "n": c.n,
                "occurrences": [[o.sent_index, o.word_index, o.length] for o in c.occurrences],
            }
            for c in extraction.candidates
        ]
        return self.save('candidates', source_id, self._to_json(data), 'json')

    def dump_features(
        self,
        source_id: str,
        extraction: KeyphraseExtraction,
        gold: Optional[Collection[str]] = None,
    ) -> Optional[Path]:
        """特征 CSV；给出标准列表时附带标签"""
        labels = label_candidates(extraction.candidates, gold) if gold is not None else [None] * len(extraction.candidates)
        rows = [
            FeatureRow(abstract_form=c.abstract_form, features=fv, label=label)
            for c, fv, label in zip(extraction.candidates, extraction.features, labels)
        ]
        return self.save('features', source_id, feature_rows_to_csv(rows), 'csv')

    def dump_scores(
        self,
        source_id: str,
        extraction: KeyphraseExtraction,
        sentence_scores: Optional[SentenceScores] = None,
    ) -> Optional[Path]:
        """判别得分、排序结果与句子分数"""
        data = {
            "candidate_scores": [
                {"abstract_form": c.abstract_form, "lda_score": s}
                for c, s in zip(extraction.candidates, extraction.scores)
            ],
            "ranking": extraction.ranking.to_list(),
            "sentences": sentence_scores.to_list() if sentence_scores is not None else [],
        }
        return self.save('scores', source_id, self._to_json(data), 'json')

    def dump(
        self,
        stage: str,
        source_id: str,
        extraction: KeyphraseExtraction,
        sentence_scores: Optional[SentenceScores] = None,
        gold: Optional[Collection[str]] = None,
    ) -> Optional[Path]:
        """按阶段名分派"""
        if stage == 'candidates':
            return self.dump_candidates(source_id, extraction)
        if stage == 'features':
            return self.dump_features(source_id, extraction, gold)
        if stage == 'scores':
            return self.dump_scores(source_id, extraction, sentence_scores)
        raise ValueError(f"unknown dump stage {stage!r}, expected one of {', '.join(DUMP_STAGES)}")

"""
主程序入口 - 关键短语抽取与抽取式摘要命令行

子命令:
    summarize   生成摘要
    keyphrases  输出前 K 个关键短语
    analyze     输出分析后的预标注词文件
    train       从特征 CSV 训练 LDA 模型
    eval        keyphrases: 关键短语 P/R；summaries: 摘要相似度

退出码: 0 成功，1 参数错误，2 I/O 错误，3 格式错误，4 空文档或退化文档
"""

import sys
import json
import asyncio
import argparse
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, List, Optional, Sequence

sys.path.insert(0, str(Path(__file__).parent))

from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler

import config
from analysis.document import AnalyzedDocument
from analysis.lexicon import Lexicon, load_lexicon
from analysis.naive_analyzer import NaiveAnalyzer
from analysis.pretagged import load_pretagged, serialize_pretagged
from evaluation.metrics import keyphrase_pr, load_gold, summary_similarity
from evaluation.report import build_report, load_summary_indices, render_report_table, report_to_json
from ingest.normalizer import read_raw_document
from ingest.segmenter import segment_sentences
from keyphrases.classifier import LabeledSample, evaluate_split, load_model, model_to_json, train
from keyphrases.feature_io import load_feature_csv
from keyphrases.syntax_rules import SyntaxRuleSet, load_rules
from summarizer.pipeline import extract_keyphrases, summarize_with_ranking
from summarizer.sentence_scorer import Heuristic
from summarizer.summary_builder import render_summary_text
from utils.errors import ArgumentEmpty, EmptyDocument, NoCandidates, SummarizerError
from utils.file_filter import FileFilter
from utils.run_config import AnalysisMode, DumpStage, EvalConfig, OutputFormat, RunConfig, TrainConfig
from utils.stage_dumper import StageDumper

logger = logging.getLogger(__name__)

# 状态信息写到标准错误，标准输出只放确定性结果
console = Console(stderr=True)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_FORMAT = 3


class CliParser(argparse.ArgumentParser):
    """参数错误以退出码 1 结束（argparse 默认为 2）"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ============================================================================
# 参数解析
# ============================================================================

def _direction(value: str) -> bool:
    if value not in ('early', 'late'):
        raise argparse.ArgumentTypeError("direction must be 'early' or 'late'")
    return value == 'early'


def _add_pipeline_args(parser: argparse.ArgumentParser, with_summary: bool):
    parser.add_argument("inputs", nargs="+", help="输入文件或目录（.tok 预标注 / 其他为原文）")
    parser.add_argument("--mode", choices=[m.value for m in AnalysisMode], default="auto",
                        help="分析方式（默认按扩展名）")
    parser.add_argument("--lexicon", help="朴素分析器词典（默认内置词典）")
    parser.add_argument("--rules", help="候选短语句法规则文件")
    parser.add_argument("--model", help=f"模型文件（默认 ${config.MODEL_ENV_VAR} 或内置模型）")
    parser.add_argument("--top-k", type=int, default=config.DEFAULT_TOP_K, help="关键短语数量")
    parser.add_argument("--max-n", type=int, default=config.DEFAULT_MAX_N, help="候选短语最大词数")
    parser.add_argument("--format", dest="output_format", choices=[f.value for f in OutputFormat],
                        default="text", help="输出格式")
    parser.add_argument("--nsl-direction", type=_direction, help="early | late（默认沿用模型）")
    parser.add_argument("--npl-direction", type=_direction, help="early | late（默认沿用模型）")
    parser.add_argument("--strong-only", action="store_true", help="只在强终止符处切分句子")
    parser.add_argument("--dump", choices=[s.value for s in DumpStage], help="导出中间阶段")
    parser.add_argument("--dump-dir", help="中间阶段输出目录（默认标准错误）")
    parser.add_argument("--gold", help="标准关键短语文件（为特征导出加标签）")
    parser.add_argument("--output-dir", help="每个输入单独写一个输出文件")
    parser.add_argument("--exclude", action="append", default=[], help="gitignore 风格排除模式")
    parser.add_argument("-v", "--verbose", action="store_true", help="输出调试日志")
    if with_summary:
        parser.add_argument("--heuristic", choices=[h.value for h in Heuristic], default="merged",
                            help="选句启发式")
        parser.add_argument("--ratio", type=float, default=config.DEFAULT_RATIO, help="压缩比 (0, 1]")
        parser.add_argument("--occurrences", action="store_true",
                            help="NSS/NCS 按出现次数计数")


def build_parser() -> argparse.ArgumentParser:
    """构造命令行解析器"""
    parser = CliParser(prog="kpas", description="基于关键短语的阿拉伯文抽取式摘要")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=CliParser)

    _add_pipeline_args(subparsers.add_parser("summarize", help="生成摘要"), with_summary=True)
    _add_pipeline_args(subparsers.add_parser("keyphrases", help="输出前 K 个关键短语"), with_summary=False)
    _add_pipeline_args(subparsers.add_parser("analyze", help="输出分析后的预标注词文件"), with_summary=False)

    train_parser = subparsers.add_parser("train", help="从特征 CSV 训练模型")
    train_parser.add_argument("features", help="带标签的特征 CSV")
    train_parser.add_argument("-o", "--output", help="模型输出路径（默认标准输出）")
    train_parser.add_argument("--lambda", dest="reg_lambda", type=float,
                              default=config.DEFAULT_REG_LAMBDA, help="岭正则系数")
    train_parser.add_argument("--holdout", type=float, help="留出比例，报告留出准确率")
    train_parser.add_argument("--nsl-direction", type=_direction, default=True)
    train_parser.add_argument("--npl-direction", type=_direction, default=True)
    train_parser.add_argument("-v", "--verbose", action="store_true")

    eval_parser = subparsers.add_parser("eval", help="评测")
    eval_parser.add_argument("target", choices=["keyphrases", "summaries"])
    eval_parser.add_argument("files", nargs="+", help="成对给出: 被评测文件 参照文件 ...")
    eval_parser.add_argument("--fuzzy", action="store_true", help="关键短语子集/超集模糊匹配")
    eval_parser.add_argument("--top-k", type=int, help="只评测前 k 个抽取短语")
    eval_parser.add_argument("--format", dest="output_format", choices=[f.value for f in OutputFormat],
                             default="text")
    eval_parser.add_argument("-v", "--verbose", action="store_true")

    return parser


def configure_logging(verbose: bool = False):
    """日志统一走 RichHandler 写到标准错误"""
    level = logging.DEBUG if verbose else getattr(logging, str(config.LOG_LEVEL).upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=console, show_time=False, show_path=verbose)],
        force=True,
    )


def _run_config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        inputs=args.inputs,
        mode=args.mode,
        lexicon=args.lexicon,
        rules=args.rules,
        model=args.model,
        heuristic=getattr(args, "heuristic", Heuristic.MERGED.value),
        top_k=args.top_k,
        ratio=getattr(args, "ratio", config.DEFAULT_RATIO),
        max_n=args.max_n,
        output_format=args.output_format,
        nsl_early_high=args.nsl_direction,
        npl_early_high=args.npl_direction,
        strong_only=args.strong_only,
        occurrence_mode=getattr(args, "occurrences", False),
        dump=args.dump,
        dump_dir=args.dump_dir,
        gold=args.gold,
        output_dir=args.output_dir,
        exclude=args.exclude,
    )


# ============================================================================
# 文档加载与批量执行
# ============================================================================

@dataclass
class Outcome:
    """单个输入的处理结果"""

    path: Path
    output: str = ""
    exit_code: int = EXIT_OK
    error: Optional[str] = None


def exit_code_for(error: BaseException) -> int:
    """异常 -> 退出码"""
    if isinstance(error, SummarizerError):
        return error.exit_code
    if isinstance(error, OSError):
        return EXIT_IO
    if isinstance(error, ValidationError):
        return EXIT_USAGE
    if isinstance(error, ValueError):
        return EXIT_FORMAT
    raise error


def load_document(path: Path, run: RunConfig, lexicon: Optional[Lexicon]) -> AnalyzedDocument:
    """按分析方式读取一篇文档"""
    if run.mode.resolve(path) is AnalysisMode.PRETAGGED:
        return load_pretagged(path)
    raw = read_raw_document(path)
    spans = segment_sentences(raw.text, strong_only=run.strong_only)
    return NaiveAnalyzer(lexicon).analyze(raw, spans)


async def run_batch(paths: Sequence[Path], worker: Callable[[Path], str]) -> List[Outcome]:
    """
    并发处理多个输入

    每个输入在独立线程中运行，共享的模型、词典和规则均为只读。
    结果按输入顺序返回。
    """
    def _guarded(path: Path) -> Outcome:
        try:
            return Outcome(path=path, output=worker(path))
        except (SummarizerError, OSError, ValueError) as e:
            # 空结果也要写出（例如没有候选短语的文档）
            partial = e.partial_output if isinstance(e, NoCandidates) else ""
            return Outcome(path=path, output=partial, exit_code=exit_code_for(e), error=str(e))

    return list(await asyncio.gather(*(asyncio.to_thread(_guarded, p) for p in paths)))


def _emit(outcomes: Sequence[Outcome], run_output_dir: Optional[Path], suffix: str) -> int:
    """写出结果，返回第一个失败输入的退出码"""
    status = EXIT_OK
    if run_output_dir:
        run_output_dir.mkdir(parents=True, exist_ok=True)

    for outcome in outcomes:
        if outcome.error:
            console.print(f"[red]❌ {outcome.path}: {outcome.error}[/red]")
            status = status or outcome.exit_code
        if outcome.output or not outcome.error:
            if run_output_dir:
                target = run_output_dir / f"{outcome.path.stem}{suffix}"
                target.write_text(outcome.output, encoding="utf-8")
                console.print(f"✅ {outcome.path} -> {target}")
            else:
                sys.stdout.write(outcome.output)
    return status


# ============================================================================
# 子命令
# ============================================================================

class PipelineRunner:
    """summarize / keyphrases / analyze 的共享执行环境"""

    def __init__(self, run: RunConfig, needs_model: bool = True):
        self.run = run
        self.lexicon: Optional[Lexicon] = None if run.mode is AnalysisMode.PRETAGGED else load_lexicon(run.lexicon)
        self.rules: Optional[SyntaxRuleSet] = load_rules(run.rules) if run.rules else None
        self.model = load_model(config.resolve_model_path(str(run.model) if run.model else None)) if needs_model else None
        self.gold = load_gold(run.gold).phrases if run.gold else None
        self.dumper = StageDumper(run.dump_dir) if run.dump else None

    def collect_inputs(self) -> List[Path]:
        files = FileFilter(exclude_patterns=self.run.exclude).collect(self.run.inputs)
        if not files:
            raise ArgumentEmpty("no input files left after filtering")
        return files

    def extract(self, path: Path):
        doc = load_document(path, self.run, self.lexicon)
        extraction = extract_keyphrases(
            doc, self.model, self.run.top_k, self.rules, self.run.max_n,
            nsl_early_high=self.run.nsl_early_high,
            npl_early_high=self.run.npl_early_high,
        )
        return doc, extraction

    def dump(self, doc, extraction, sentence_scores=None):
        if self.dumper and self.run.dump:
            self.dumper.dump(self.run.dump.value, doc.source_id, extraction, sentence_scores, self.gold)

    def summarize_one(self, path: Path) -> str:
        doc, extraction = self.extract(path)
        summary, scores = summarize_with_ranking(
            doc, extraction.ranking, self.run.heuristic, self.run.ratio, self.run.occurrence_mode
        )
        self.dump(doc, extraction, scores)

        if self.run.output_format is OutputFormat.JSON:
            output = json.dumps({
                "config": self.run.echo(),
                "source": doc.source_id,
                "sentence_count": doc.sentence_count,
                "summary": summary.to_dict(),
                "summary_text": render_summary_text(doc, summary),
                "ranking": extraction.ranking.to_list(),
                "sentences": scores.to_list(),
            }, ensure_ascii=False, indent=2, sort_keys=True) + "\n"
        else:
            output = render_summary_text(doc, summary) + "\n"

        if not extraction.candidates:
            raise NoCandidates(f"no candidate phrases in {doc.source_id}", partial_output=output)
        return output

    def keyphrases_one(self, path: Path) -> str:
        doc, extraction = self.extract(path)
        self.dump(doc, extraction)

        if self.run.output_format is OutputFormat.JSON:
            output = json.dumps({
                "config": self.run.echo(),
                "source": doc.source_id,
                "keyphrases": extraction.ranking.to_list(),
            }, ensure_ascii=False, indent=2, sort_keys=True) + "\n"
        else:
            output = ''.join(
                f"{e.abstract_form}\t{e.lda_score!r}\t{e.normalized_score!r}\n"
                for e in extraction.ranking
            )

        if not extraction.candidates:
            raise NoCandidates(f"no candidate phrases in {doc.source_id}", partial_output=output)
        return output

    def analyze_one(self, path: Path) -> str:
        doc = load_document(path, self.run, self.lexicon)
        if doc.sentence_count == 0:
            raise EmptyDocument(f"document {doc.source_id} has no sentences")
        if self.run.output_format is OutputFormat.JSON:
            payload = {
                "config": self.run.echo(),
                "source": doc.source_id,
                "sentences": [
                    {
                        "terminator": s.terminator,
                        "contains_verb": s.contains_verb,
                        "is_question": s.is_question,
                        "tokens": [
                            {"surface": t.surface, "lemma": t.lemma, "pos": t.pos.value,
                             "conj_prefix": t.conj_prefix, "root": t.root, "pattern": t.pattern}
                            for t in s.tokens
                        ],
                    }
                    for s in doc.sentences
                ],
            }
            return json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True) + "\n"
        return serialize_pretagged(doc)


def _run_pipeline(run: RunConfig, command: str) -> int:
    runner = PipelineRunner(run, needs_model=command != "analyze")
    files = runner.collect_inputs()
    worker = {
        "summarize": runner.summarize_one,
        "keyphrases": runner.keyphrases_one,
        "analyze": runner.analyze_one,
    }[command]

    outcomes = asyncio.run(run_batch(files, worker))

    is_json = run.output_format is OutputFormat.JSON
    suffix = {
        "summarize": ".summary.json" if is_json else ".summary.txt",
        "keyphrases": ".keyphrases.json" if is_json else ".keyphrases.txt",
        "analyze": ".analysis.json" if is_json else ".tok",
    }[command]
    if len(files) > 1:
        console.print(f"🚀 {command}: {len(files)} inputs")
    return _emit(outcomes, run.output_dir, suffix)


def cmd_summarize(run: RunConfig) -> int:
    """生成摘要"""
    return _run_pipeline(run, "summarize")


def cmd_keyphrases(run: RunConfig) -> int:
    """输出关键短语"""
    return _run_pipeline(run, "keyphrases")


def cmd_analyze(run: RunConfig) -> int:
    """输出分析结果"""
    return _run_pipeline(run, "analyze")


def cmd_train(train_config: TrainConfig) -> int:
    """从特征 CSV 训练模型"""
    rows = load_feature_csv(train_config.features)
    samples = [LabeledSample(features=r.features, label=r.label) for r in rows if r.label is not None]
    skipped = len(rows) - len(samples)
    if skipped:
        logger.warning(f"Skipped {skipped} unlabeled rows")

    model = train(samples, train_config.reg_lambda, train_config.nsl_early_high, train_config.npl_early_high)
    console.print(f"✅ trained on {len(samples)} samples")

    if train_config.holdout:
        report = evaluate_split(samples, train_config.holdout, train_config.reg_lambda)
        console.print(f"📊 held-out accuracy {report.accuracy:.4f} "
                      f"({report.test_size} held out, {report.train_size} trained)")

    text = model_to_json(model)
    if train_config.output:
        train_config.output.write_text(text, encoding="utf-8")
        console.print(f"💾 model written to {train_config.output}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _read_extracted(path: Path, top_k: Optional[int]) -> List[str]:
    """读取 keyphrases 的输出（JSON 或每行一个短语，取第一个制表符前的字段）"""
    text = path.read_bytes().decode("utf-8")
    if text.lstrip().startswith("{"):
        forms = [e["abstract_form"] for e in json.loads(text).get("keyphrases", [])]
    else:
        forms = [line.split("\t", 1)[0].strip() for line in text.splitlines() if line.strip()]
    return forms[:top_k] if top_k else forms


def cmd_eval(eval_config: EvalConfig) -> int:
    """评测关键短语或摘要"""
    per_document = []
    for candidate, reference in eval_config.pairs:
        if eval_config.target == "keyphrases":
            report = keyphrase_pr(
                _read_extracted(candidate, eval_config.top_k),
                load_gold(reference),
                fuzzy=eval_config.fuzzy,
            )
        else:
            report = summary_similarity(load_summary_indices(candidate), load_summary_indices(reference))
        per_document.append((str(candidate), report))

    report = build_report(per_document)
    if eval_config.output_format is OutputFormat.JSON:
        sys.stdout.write(report_to_json(report))
    else:
        render_report_table(report, f"eval {eval_config.target}", Console(file=sys.stdout, width=120))
    return EXIT_OK


# ============================================================================
# 入口
# ============================================================================

def main(argv: Optional[Sequence[str]] = None) -> int:
    """主程序入口，返回退出码"""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(getattr(args, "verbose", False))
    logger.debug(f"Config: {config.get_config_summary()}")

    try:
        if args.command == "train":
            train_config = TrainConfig(
                features=args.features,
                output=args.output,
                reg_lambda=args.reg_lambda,
                holdout=args.holdout,
                nsl_early_high=args.nsl_direction,
                npl_early_high=args.npl_direction,
            )
            return cmd_train(train_config)

        if args.command == "eval":
            eval_config = EvalConfig(
                target=args.target,
                files=args.files,
                fuzzy=args.fuzzy,
                top_k=args.top_k,
                output_format=args.output_format,
            )
            return cmd_eval(eval_config)

        run = _run_config(args)
        return {
            "summarize": cmd_summarize,
            "keyphrases": cmd_keyphrases,
            "analyze": cmd_analyze,
        }[args.command](run)

    except ValidationError as e:
        first = e.errors()[0]
        where = '.'.join(str(p) for p in first.get('loc', ()))
        console.print(f"[red]❌ invalid argument {where}: {first.get('msg')}[/red]")
        return EXIT_USAGE
    except KeyboardInterrupt:
        console.print("\n⚠️  用户中断\n")
        return 130
    except (SummarizerError, OSError, ValueError) as e:
        console.print(f"[red]❌ {e}[/red]")
        return exit_code_for(e)


if __name__ == "__main__":
    sys.exit(main())

import sys
from pathlib import Path

import click

from ..families import family_names
from ..services.analysis_service import CHECK_KINDS, AnalysisService
from ..services.generator_service import OUTPUT_FORMATS, GeneratorService
from ..services.report_service import TABLES, ReportService
from ..utils.config_manager import ConfigManager
from ..utils.errors import CocoaKitError
from ..utils.logger import setup_logging


EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_USAGE = 2


def _load_config(ctx):
    return ConfigManager(ctx.obj['config_dir']).load_config()


def _fail(ctx, error, code=EXIT_USAGE):
    click.echo(f"❌ Error: {error}", err=True)
    if ctx.obj['debug']:
        import traceback
        traceback.print_exc()
    sys.exit(code)


@click.group()
@click.option('--debug', is_flag=True, help='Enable debug mode')
@click.option('--config', type=str, help='Path to config directory')
@click.pass_context
def cocoa_kit(ctx, debug, config):
    """Chains of co-Buechi automata: generators, checks and size tables"""
    ctx.ensure_object(dict)
    ctx.obj['debug'] = debug
    ctx.obj['config_dir'] = config or 'config'

    log_config = ConfigManager(ctx.obj['config_dir']).get_logging_config()
    if debug:
        log_config = {**log_config, 'level': 'DEBUG', 'console_level': 'DEBUG'}
    ctx.obj['logger'] = setup_logging(log_config)


@cocoa_kit.command('gen')
@click.argument('family', type=click.Choice(family_names()))
@click.option('--k', type=int, help='Family parameter k')
@click.option('--i', type=int, help='Level index i (dcw-l)')
@click.option('--j', type=int, help='Level index j (dcw-lhat)')
@click.option('--nondominated', is_flag=True, help='Use only non-dominated index pairs')
@click.option('--out', type=click.Path(dir_okay=False), help='Output file (default stdout)')
@click.option('--format', 'output_format', type=click.Choice(OUTPUT_FORMATS),
              default='aut', help='Output format')
@click.pass_context
def gen(ctx, family, k, i, j, nondominated, out, output_format):
    """Generate a family member as an AUT/COCOA or HOA file"""
    try:
        service = GeneratorService(_load_config(ctx))
        result = service.generate(family, k=k, i=i, j=j, nondominated=nondominated)
        if not result['success']:
            _fail(ctx, result['error'])

        if not out:
            click.echo(service.render(result['value'], output_format), nl=False)
            return

        path = service.write(result['value'], out, output_format)
        click.echo(f"✅ Wrote {family} ({result['kind']}, {result['states']} states) to {path}")
        click.echo(f"⏱️  Generated in {result['duration']:.2f}s")

    except CocoaKitError as e:
        _fail(ctx, e)


@cocoa_kit.command('eval')
@click.argument('path', type=click.Path(dir_okay=False))
@click.argument('lasso', type=str)
@click.pass_context
def eval_lasso(ctx, path, lasso):
    """Evaluate a lasso word 'stem|loop' on an automaton or chain"""
    try:
        service = AnalysisService(_load_config(ctx))
        result = service.evaluate(service.load(path), lasso)
        if not result['success']:
            _fail(ctx, result['error'])
        accepted = 'true' if result['accepted'] else 'false'
        click.echo(f"color={result['color']} accepted={accepted}")

    except CocoaKitError as e:
        _fail(ctx, e)


@cocoa_kit.command('check')
@click.argument('kind', type=click.Choice(CHECK_KINDS))
@click.argument('paths', nargs=-1, required=True, type=click.Path(dir_okay=False))
@click.option('--k', type=int, help='Parameter k for certify')
@click.option('--cert-out', type=click.Path(dir_okay=False), help='Write the certificate here')
@click.pass_context
def check(ctx, kind, paths, k, cert_out):
    """Decide containment, equivalence, emptiness, chain shape or the 2^k bound.

    ``sample`` cross-checks direct evaluation against the deterministic view
    on the lassos configured under ``sampling``.
    """
    service = AnalysisService(_load_config(ctx))
    result = service.check(kind, list(paths), k=k, cert_out=cert_out)
    if not result['success']:
        _fail(ctx, result['error'])

    if result['holds']:
        click.echo(f"✅ {kind} holds")
        if kind == 'certify':
            click.echo(f"📊 Bound: {result['bound']} ({result['states']} states)")
            if result.get('cert_path'):
                click.echo(f"📄 Certificate written to {result['cert_path']}")
        if kind == 'sample':
            click.echo(f"📊 Agreed on {result['checked']} lassos")
        click.echo(f"⏱️  Checked in {result['duration']:.2f}s")
        return

    click.echo(f"❌ {kind} fails")
    if result.get('witness') is not None:
        click.echo(f"witness: {result['witness']}")
    if result.get('violation') is not None:
        violation = result['violation']
        click.echo(f"violation: {violation.code} {violation.message}")
    for diagnostic in result.get('diagnostics') or []:
        click.echo(f"  • {diagnostic}")
    sys.exit(EXIT_FAILS)


@cocoa_kit.command('table')
@click.argument('which', type=click.Choice(TABLES))
@click.option('--kmax', type=int, help='Largest k (default from config)')
@click.option('--format', 'output_format', type=click.Choice(['csv', 'text']),
              default='text', help='Output format')
@click.option('--out', type=click.Path(dir_okay=False), help='Output file (default stdout)')
@click.option('--timing', is_flag=True, help='Include wall time in CSV output')
@click.pass_context
def table(ctx, which, kmax, output_format, out, timing):
    """Emit a size comparison table"""
    try:
        service = ReportService(_load_config(ctx))
        report = service.build(which, kmax)
        text = service.render(report, output_format, timing)

        if not out:
            click.echo(text, nl=False)
            return

        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, 'w', encoding='utf-8', newline='\n') as handle:
            handle.write(text)
        click.echo(f"✅ Wrote {len(report.rows)} rows to {path}")

    except CocoaKitError as e:
        _fail(ctx, e)


@cocoa_kit.command('config-test')
@click.pass_context
def config_test(ctx):
    """Test configuration validity"""
    try:
        config_manager = ConfigManager(ctx.obj['config_dir'])

        click.echo("🔧 Testing configuration...")

        result = config_manager.validate_config()

        if result['valid']:
            click.echo("✅ Configuration is valid!")
        else:
            click.echo("❌ Configuration has errors:")
            for error in result['errors']:
                click.echo(f"  • {error}")

        if result['warnings']:
            click.echo("\n⚠️  Warnings:")
            for warning in result['warnings']:
                click.echo(f"  • {warning}")

        click.echo(f"\n🎲 Sampling seed: {config_manager.get_seed()}")
        click.echo("📊 Table limits:")
        for name in TABLES:
            click.echo(f"  {name}: kmax {config_manager.get_kmax(name)}")

        if not result['valid']:
            sys.exit(EXIT_FAILS)

    except CocoaKitError as e:
        _fail(ctx, e)


if __name__ == '__main__':
    cocoa_kit()

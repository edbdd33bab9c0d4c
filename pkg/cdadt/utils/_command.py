import click

EXIT_USAGE = 1
EXIT_RUNTIME = 2
EXIT_IO = 3


class CdadtCommand(click.Command):
    """A click command whose usage errors exit with code 1."""

    def make_context(self, info_name, args, parent=None, **extra):
        try:
            return super().make_context(info_name, args, parent=parent, **extra)
        except click.UsageError as e:
            e.exit_code = EXIT_USAGE
            raise


class CdadtGroup(click.Group):
    """A click group whose usage errors exit with code 1."""

    command_class = CdadtCommand

    def make_context(self, info_name, args, parent=None, **extra):
        try:
            return super().make_context(info_name, args, parent=parent, **extra)
        except click.UsageError as e:
            e.exit_code = EXIT_USAGE
            raise

    def resolve_command(self, ctx, args):
        try:
            return super().resolve_command(ctx, args)
        except click.UsageError as e:
            e.exit_code = EXIT_USAGE
            raise


class RuntimeFailure(click.ClickException):
    """Runtime failure of a command, such as a diverged run."""

    exit_code = EXIT_RUNTIME


class IOFailure(click.ClickException):
    """A file could not be read or written."""

    exit_code = EXIT_IO


class UsageFailure(click.UsageError):
    """Invalid parameters detected after option parsing."""

    exit_code = EXIT_USAGE
